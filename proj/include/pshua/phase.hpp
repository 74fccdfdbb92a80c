#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace pshua {

using cplx = std::complex<double>;

// e(theta) = exp(2 pi i theta). The argument is reduced to quarter turns
// first, so e(k/4) is exact and nearby angles keep full relative accuracy.
cplx unit_root(double theta);

// Fractional part of lambda * m in [-1/2, 1/2), using an error-free product
// so that the result stays accurate when lambda * m is large.
double frac_mul(double lambda, std::uint64_t m);

// Frequency alpha = a/q + lambda with 0 <= a < q, gcd(a,q) = 1 and
// |lambda| < 1/q. The rational part is reduced modulo 1 exactly.
class PhaseAccurateAlpha {
 public:
  PhaseAccurateAlpha() = default;
  PhaseAccurateAlpha(std::int64_t a, std::uint64_t q, double lambda = 0.0);

  // Takes a real alpha as 0/1 + (alpha - round(alpha)).
  static PhaseAccurateAlpha from_real(double alpha);
  // "a/q", "a/q+lambda" or "a/q-lambda".
  static PhaseAccurateAlpha parse(std::string_view text);

  std::uint64_t a() const { return a_; }
  std::uint64_t q() const { return q_; }
  double lambda() const { return lambda_; }
  double approx() const;

  PhaseAccurateAlpha negated() const;
  // alpha + 1 has the same representation; kept for symmetry in tests.
  PhaseAccurateAlpha shifted(std::int64_t k) const;

  // Reduced phase of alpha * m in [-1/2, 1/2).
  double phase(std::uint64_t m) const;
  cplx e(std::uint64_t m) const { return unit_root(phase(m)); }

  std::string str() const;

 private:
  std::uint64_t a_ = 0;
  std::uint64_t q_ = 1;
  double lambda_ = 0.0;
};

// Neumaier-compensated complex sum with a running rounding-error budget.
class ComplexAccumulator {
 public:
  void add(cplx term);
  void merge(const ComplexAccumulator& other);

  cplx value() const { return {re_ + re_c_, im_ + im_c_}; }
  double re() const { return re_ + re_c_; }
  double im() const { return im_ + im_c_; }
  std::uint64_t terms() const { return terms_; }
  double max_term() const { return max_mag_; }
  // terms * 4u * max|term|; covers the per-term phase rounding as well.
  double error_budget() const;

 private:
  double re_ = 0.0, re_c_ = 0.0;
  double im_ = 0.0, im_c_ = 0.0;
  std::uint64_t terms_ = 0;
  double max_mag_ = 0.0;
};

// Compensated real sum.
class RealAccumulator {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0, comp_ = 0.0;
};

}  // namespace pshua
