#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pshua/gamma.hpp"
#include "pshua/phase.hpp"
#include "pshua/sieve.hpp"

namespace pshua {

// S1(N,a) = sum_{p<=N} e(a p)            S3(N,a) = sum_{p<=P} e(a p^3)
// T1(N,a) = (1/g) sum_{p<=N, p in P_g} p^(1-g) e(a p)
// T3(N,a) = (1/g) sum_{p<=P, p in P_g} p^(1-g) e(a p^3),   P = floor(N^(1/3))
enum class SumKind { S1, S3, T1, T3 };

struct SumSpec {
  SumKind kind = SumKind::S1;
  GammaParam gamma = GammaParam::one();
};

// "S1", "S3", "T1:9/10", "T3:2/3".
SumSpec parse_sum_spec(std::string_view text);
std::string to_string(const SumSpec& spec);

// Sparse trigonometric polynomial sum_j c_j e(f_j alpha) with frequencies in
// ascending order; the common representation behind every sum above.
class TrigPolynomial {
 public:
  TrigPolynomial() = default;
  TrigPolynomial(std::vector<std::uint64_t> freqs, std::vector<double> coefs);

  static TrigPolynomial build(const SumSpec& spec, std::uint64_t N, const PrimeSieve& sieve);

  ComplexAccumulator evaluate(const PhaseAccurateAlpha& alpha) const;
  cplx operator()(double alpha) const;
  // f(k/M) for k = 0..M-1 through one FFT.
  std::vector<cplx> sample(std::size_t M) const;

  std::span<const std::uint64_t> freqs() const { return freqs_; }
  std::span<const double> coefs() const { return coefs_; }
  std::size_t size() const { return freqs_.size(); }
  std::uint64_t max_frequency() const { return freqs_.empty() ? 0 : freqs_.back(); }
  // sum |c_j|, the trivial bound on |f|
  double l1_norm() const;
  double l2_norm_squared() const;

 private:
  std::vector<std::uint64_t> freqs_;
  std::vector<double> coefs_;
};

ComplexAccumulator eval_S1(std::uint64_t N, const PhaseAccurateAlpha& alpha, const PrimeSieve& sieve);
ComplexAccumulator eval_S3(std::uint64_t N, const PhaseAccurateAlpha& alpha, const PrimeSieve& sieve);
ComplexAccumulator eval_T1(std::uint64_t N, const PhaseAccurateAlpha& alpha, const GammaParam& gamma,
                           const PrimeSieve& sieve);
ComplexAccumulator eval_T3(std::uint64_t N, const PhaseAccurateAlpha& alpha, const GammaParam& gamma,
                           const PrimeSieve& sieve);
ComplexAccumulator eval_sum(const SumSpec& spec, std::uint64_t N, const PhaseAccurateAlpha& alpha,
                            const PrimeSieve& sieve);

// psi(x) = x - floor(x) - 1/2
double psi(double x);
// Distance to the nearest integer.
double nearest_int_distance(double x);

struct PsiTruncation {
  double lhs_error = 0.0;  // |psi(theta) + sum_{0<|h|<=H} e(theta h)/(2 pi i h)|
  double g = 0.0;          // min(1, 1/(H ||theta||)), 1 when ||theta|| = 0
};

PsiTruncation psi_truncation_audit(double theta, std::uint64_t H);

}  // namespace pshua
