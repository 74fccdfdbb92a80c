#include "pshua/phase.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pshua/errors.hpp"
#include "pshua/integer.hpp"

namespace pshua {
namespace {

// Exact reduction of a double to [-1/2, 1/2).
double reduce_unit(double x) {
  double r = x - std::nearbyint(x);
  if (r >= 0.5) r -= 1.0;
  if (r < -0.5) r += 1.0;
  return r;
}

inline void two_sum(double& sum, double& comp, double x) {
  const double t = sum + x;
  if (std::fabs(sum) >= std::fabs(x)) {
    comp += (sum - t) + x;
  } else {
    comp += (x - t) + sum;
  }
  sum = t;
}

}  // namespace

cplx unit_root(double theta) {
  const double quarters = 4.0 * reduce_unit(theta);
  const double turn = std::nearbyint(quarters);
  const double angle = (quarters - turn) * (std::numbers::pi / 2);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  switch ((static_cast<int>(turn) % 4 + 4) % 4) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

double frac_mul(double lambda, std::uint64_t m) {
  if (lambda == 0.0 || m == 0) return 0.0;
  // m = hi * 2^32 + lo, both halves exact in a double
  const double hi = static_cast<double>(m >> 32) * 4294967296.0;
  const double lo = static_cast<double>(m & 0xffffffffULL);
  double total = 0.0;
  for (double part : {hi, lo}) {
    if (part == 0.0) continue;
    const double prod = lambda * part;
    const double err = std::fma(lambda, part, -prod);
    total += reduce_unit(prod) + reduce_unit(err);
  }
  return reduce_unit(total);
}

PhaseAccurateAlpha::PhaseAccurateAlpha(std::int64_t a, std::uint64_t q, double lambda) {
  if (q == 0) throw DomainError("alpha: q must be positive");
  if (!std::isfinite(lambda)) throw DomainError("alpha: lambda must be finite");
  const std::int64_t qs = static_cast<std::int64_t>(q);
  std::int64_t r = a % qs;
  if (r < 0) r += qs;
  const std::uint64_t g = gcd_u64(static_cast<std::uint64_t>(r), q);
  a_ = static_cast<std::uint64_t>(r) / (r == 0 ? q : g);
  q_ = r == 0 ? 1 : q / g;
  lambda_ = lambda;
  if (!(std::fabs(lambda_) < 1.0 / static_cast<double>(q_))) {
    throw DomainError("alpha: |lambda| must be below 1/q");
  }
}

PhaseAccurateAlpha PhaseAccurateAlpha::from_real(double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
  return PhaseAccurateAlpha(0, 1, reduce_unit(alpha));
}

PhaseAccurateAlpha PhaseAccurateAlpha::parse(std::string_view text) {
  std::string s(text);
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const mpq_class frac = parse_fraction(s.substr(0, split));
  double lambda = 0.0;
  if (split != std::string::npos) {
    try {
      std::size_t used = 0;
      lambda = std::stod(s.substr(split), &used);
      if (used != s.size() - split) throw DomainError("trailing characters");
    } catch (const std::logic_error&) {
      throw DomainError("malformed alpha: '" + s + "'");
    }
  }
  mpz_class num = frac.get_num();
  const mpz_class& den = frac.get_den();
  if (!den.fits_ulong_p()) throw DomainError("alpha denominator too large: '" + s + "'");
  mpz_class reduced;
  mpz_fdiv_r(reduced.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return PhaseAccurateAlpha(static_cast<std::int64_t>(reduced.get_ui()), den.get_ui(), lambda);
}

double PhaseAccurateAlpha::approx() const {
  return static_cast<double>(a_) / static_cast<double>(q_) + lambda_;
}

PhaseAccurateAlpha PhaseAccurateAlpha::negated() const {
  return PhaseAccurateAlpha(-static_cast<std::int64_t>(a_), q_, -lambda_);
}

PhaseAccurateAlpha PhaseAccurateAlpha::shifted(std::int64_t k) const {
  return PhaseAccurateAlpha(static_cast<std::int64_t>(a_) + k * static_cast<std::int64_t>(q_), q_, lambda_);
}

double PhaseAccurateAlpha::phase(std::uint64_t m) const {
  double rational = 0.0;
  if (a_ != 0) {
    const std::uint64_t r = mul_mod(a_, m % q_, q_);
    rational = static_cast<double>(r) / static_cast<double>(q_);
  }
  return reduce_unit(rational + frac_mul(lambda_, m));
}

std::string PhaseAccurateAlpha::str() const {
  std::string out = std::to_string(a_) + "/" + std::to_string(q_);
  if (lambda_ != 0.0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%+.17g", lambda_);
    out += buf;
  }
  return out;
}

void ComplexAccumulator::add(cplx term) {
  two_sum(re_, re_c_, term.real());
  two_sum(im_, im_c_, term.imag());
  ++terms_;
  const double mag = std::abs(term);
  if (mag > max_mag_) max_mag_ = mag;
}

void ComplexAccumulator::merge(const ComplexAccumulator& other) {
  two_sum(re_, re_c_, other.re_);
  two_sum(re_, re_c_, other.re_c_);
  two_sum(im_, im_c_, other.im_);
  two_sum(im_, im_c_, other.im_c_);
  terms_ += other.terms_;
  if (other.max_mag_ > max_mag_) max_mag_ = other.max_mag_;
}

double ComplexAccumulator::error_budget() const {
  constexpr double u = std::numeric_limits<double>::epsilon() / 2;
  return static_cast<double>(terms_) * 4.0 * u * max_mag_;
}

void RealAccumulator::add(double x) { two_sum(sum_, comp_, x); }

}  // namespace pshua
