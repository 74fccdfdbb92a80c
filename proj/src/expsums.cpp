#include "pshua/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pshua/errors.hpp"
#include "pshua/fft.hpp"
#include "pshua/integer.hpp"
#include "pshua/psprimes.hpp"

namespace pshua {

SumSpec parse_sum_spec(std::string_view text) {
  SumSpec spec;
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  if (head == "S1") {
    spec.kind = SumKind::S1;
  } else if (head == "S3") {
    spec.kind = SumKind::S3;
  } else if (head == "T1") {
    spec.kind = SumKind::T1;
  } else if (head == "T3") {
    spec.kind = SumKind::T3;
  } else {
    throw DomainError("unknown sum kind '" + std::string(head) + "'");
  }
  if (colon != std::string_view::npos) {
    if (spec.kind == SumKind::S1 || spec.kind == SumKind::S3) {
      throw DomainError("S sums take no gamma: '" + std::string(text) + "'");
    }
    spec.gamma = GammaParam::parse(text.substr(colon + 1));
  }
  return spec;
}

std::string to_string(const SumSpec& spec) {
  switch (spec.kind) {
    case SumKind::S1: return "S1";
    case SumKind::S3: return "S3";
    case SumKind::T1: return "T1:" + spec.gamma.str();
    case SumKind::T3: return "T3:" + spec.gamma.str();
  }
  return "?";
}

TrigPolynomial::TrigPolynomial(std::vector<std::uint64_t> freqs, std::vector<double> coefs)
    : freqs_(std::move(freqs)), coefs_(std::move(coefs)) {
  if (freqs_.size() != coefs_.size()) throw DomainError("TrigPolynomial: size mismatch");
  if (!std::is_sorted(freqs_.begin(), freqs_.end())) throw DomainError("TrigPolynomial: unsorted");
}

TrigPolynomial TrigPolynomial::build(const SumSpec& spec, std::uint64_t N, const PrimeSieve& sieve) {
  const bool cubic = spec.kind == SumKind::S3 || spec.kind == SumKind::T3;
  const bool weighted = spec.kind == SumKind::T1 || spec.kind == SumKind::T3;
  const std::uint64_t range = cubic ? icbrt(N) : N;
  if (range > sieve.limit()) {
    throw CapacityError("sum range " + std::to_string(range) + " beyond sieve limit " +
                        std::to_string(sieve.limit()));
  }
  std::vector<std::uint64_t> primes;
  if (weighted) {
    primes = ps_primes_up_to(range, spec.gamma, sieve);
  } else {
    const auto view = sieve.primes_up_to(range);
    primes.assign(view.begin(), view.end());
  }
  std::vector<double> coefs(primes.size(), 1.0);
  if (weighted) {
    for (std::size_t i = 0; i < primes.size(); ++i) coefs[i] = ps_weight(primes[i], spec.gamma);
  }
  if (cubic) {
    for (auto& p : primes) p = p * p * p;
  }
  return TrigPolynomial(std::move(primes), std::move(coefs));
}

ComplexAccumulator TrigPolynomial::evaluate(const PhaseAccurateAlpha& alpha) const {
  ComplexAccumulator acc;
  for (std::size_t j = 0; j < freqs_.size(); ++j) acc.add(coefs_[j] * alpha.e(freqs_[j]));
  return acc;
}

cplx TrigPolynomial::operator()(double alpha) const {
  return evaluate(PhaseAccurateAlpha::from_real(alpha)).value();
}

std::vector<cplx> TrigPolynomial::sample(std::size_t M) const { return sample_uniform(freqs_, coefs_, M); }

double TrigPolynomial::l1_norm() const {
  RealAccumulator acc;
  for (double c : coefs_) acc.add(std::fabs(c));
  return acc.value();
}

double TrigPolynomial::l2_norm_squared() const {
  RealAccumulator acc;
  for (double c : coefs_) acc.add(c * c);
  return acc.value();
}

ComplexAccumulator eval_sum(const SumSpec& spec, std::uint64_t N, const PhaseAccurateAlpha& alpha,
                            const PrimeSieve& sieve) {
  return TrigPolynomial::build(spec, N, sieve).evaluate(alpha);
}

ComplexAccumulator eval_S1(std::uint64_t N, const PhaseAccurateAlpha& alpha, const PrimeSieve& sieve) {
  return eval_sum({SumKind::S1, GammaParam::one()}, N, alpha, sieve);
}

ComplexAccumulator eval_S3(std::uint64_t N, const PhaseAccurateAlpha& alpha, const PrimeSieve& sieve) {
  return eval_sum({SumKind::S3, GammaParam::one()}, N, alpha, sieve);
}

ComplexAccumulator eval_T1(std::uint64_t N, const PhaseAccurateAlpha& alpha, const GammaParam& gamma,
                           const PrimeSieve& sieve) {
  return eval_sum({SumKind::T1, gamma}, N, alpha, sieve);
}

ComplexAccumulator eval_T3(std::uint64_t N, const PhaseAccurateAlpha& alpha, const GammaParam& gamma,
                           const PrimeSieve& sieve) {
  return eval_sum({SumKind::T3, gamma}, N, alpha, sieve);
}

double psi(double x) { return x - std::floor(x) - 0.5; }

double nearest_int_distance(double x) { return std::fabs(x - std::nearbyint(x)); }

PsiTruncation psi_truncation_audit(double theta, std::uint64_t H) {
  if (H == 0) throw DomainError("psi_truncation_audit: H must be at least 1");
  // sum_{0<|h|<=H} e(theta h)/(2 pi i h) = sum_{h=1}^{H} sin(2 pi h theta)/(pi h)
  RealAccumulator acc;
  acc.add(psi(theta));
  for (std::uint64_t h = 1; h <= H; ++h) {
    const double s = unit_root(frac_mul(theta, h)).imag();
    acc.add(s / (std::numbers::pi * static_cast<double>(h)));
  }
  PsiTruncation out;
  out.lhs_error = std::fabs(acc.value());
  const double dist = nearest_int_distance(theta);
  out.g = dist == 0.0 ? 1.0 : std::min(1.0, 1.0 / (static_cast<double>(H) * dist));
  return out;
}

}  // namespace pshua
