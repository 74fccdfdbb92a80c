#include "pshua/circle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "pshua/errors.hpp"
#include "pshua/fft.hpp"
#include "pshua/integer.hpp"

namespace pshua {

PhaseAccurateAlpha RationalApprox::to_alpha() const { return PhaseAccurateAlpha(a, q, lambda); }

RationalApprox dirichlet_approx(double alpha, double tau) {
  if (!std::isfinite(alpha)) throw DomainError("dirichlet_approx: alpha must be finite");
  if (!(tau >= 1.0)) throw DomainError("dirichlet_approx: tau must be at least 1");
  const mpq_class x(alpha);  // exact binary value
  // convergents h/k of the continued fraction of x
  mpz_class h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  mpz_class best_h, best_k;
  mpz_class num = x.get_num(), den = x.get_den();
  const mpz_class tau_floor(std::floor(tau));
  for (;;) {
    mpz_class digit;
    mpz_fdiv_q(digit.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const mpz_class h = digit * h_prev + h_prev2;
    const mpz_class k = digit * k_prev + k_prev2;
    if (k > tau_floor) break;
    best_h = h;
    best_k = k;
    const mpz_class rem = num - digit * den;
    if (rem == 0) break;
    num = den;
    den = rem;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  RationalApprox out;
  if (!best_h.fits_slong_p() || !best_k.fits_ulong_p()) {
    throw DomainError("dirichlet_approx: convergent does not fit 64 bits");
  }
  out.a = best_h.get_si();
  out.q = best_k.get_ui();
  const mpq_class lambda = x - mpq_class(best_h, best_k);
  out.lambda = lambda.get_d();
  return out;
}

ArcDissection ArcDissection::from_sigma(std::uint64_t N, const mpq_class& sigma) {
  if (sigma <= 0 || sigma > mpq_class(1, 6)) throw DomainError("sigma must lie in (0, 1/6]");
  if (N < 2) throw DomainError("dissection needs N >= 2");
  if (!sigma.get_num().fits_uint_p() || !sigma.get_den().fits_uint_p()) {
    throw DomainError("sigma has oversized numerator or denominator");
  }
  const unsigned r = static_cast<unsigned>(sigma.get_num().get_ui());
  const unsigned s = static_cast<unsigned>(sigma.get_den().get_ui());
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), N, r);
  const mpz_class Q = floor_root(power, s);
  const double tau = std::pow(static_cast<double>(N), 1.0 - sigma.get_d());
  ArcDissection d(N, Q.get_ui(), tau);
  d.sigma_ = sigma;
  return d;
}

ArcDissection::ArcDissection(std::uint64_t N, std::uint64_t Q, double tau) : N_(N), Q_(Q), tau_(tau) {
  if (Q_ < 1) throw DomainError("dissection needs Q >= 1");
  if (!(tau_ >= 1.0)) throw DomainError("dissection needs tau >= 1");
  build();
}

void ArcDissection::build() {
  arcs_.clear();
  for (std::uint64_t q = 1; q <= Q_; ++q) {
    for (std::uint64_t a = 1; a <= q; ++a) {
      if (gcd_u64(a, q) != 1) continue;
      MajorArc arc;
      arc.a = a;
      arc.q = q;
      arc.center = static_cast<double>(a) / static_cast<double>(q);
      arc.halfwidth = 1.0 / (static_cast<double>(q) * tau_);
      arc.lo = std::max(arc.center - arc.halfwidth, window_lo());
      arc.hi = std::min(arc.center + arc.halfwidth, window_hi());
      if (arc.hi > arc.lo) arcs_.push_back(arc);
    }
  }
  std::vector<Interval> pieces;
  pieces.reserve(arcs_.size());
  for (const auto& arc : arcs_) pieces.push_back({arc.lo, arc.hi});
  std::sort(pieces.begin(), pieces.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  major_.clear();
  for (const auto& piece : pieces) {
    if (!major_.empty() && piece.lo <= major_.back().hi) {
      major_.back().hi = std::max(major_.back().hi, piece.hi);
    } else {
      major_.push_back(piece);
    }
  }
}

std::vector<Interval> ArcDissection::minor_intervals() const {
  std::vector<Interval> out;
  double cursor = window_lo();
  for (const auto& m : major_) {
    if (m.lo > cursor) out.push_back({cursor, m.lo});
    cursor = std::max(cursor, m.hi);
  }
  if (window_hi() > cursor) out.push_back({cursor, window_hi()});
  return out;
}

ArcClass classify(double alpha, const ArcDissection& d) {
  if (!(alpha >= d.window_lo() && alpha <= d.window_hi())) {
    throw DomainError("classify: alpha outside [1/tau, 1 + 1/tau]");
  }
  for (std::uint64_t q = 1; q <= d.Q(); ++q) {
    const double qd = static_cast<double>(q);
    const double nearest = std::nearbyint(alpha * qd);
    if (nearest < 1.0 || nearest > qd) continue;
    const auto a = static_cast<std::uint64_t>(nearest);
    if (gcd_u64(a, q) != 1) continue;
    const double dist = std::fabs(alpha - nearest / qd);
    const double halfwidth = 1.0 / (qd * d.tau());
    // boundary points belong to the arc; allow for the rounding in dist
    if (dist <= halfwidth * (1.0 + 1e-12)) return {true, a, q};
  }
  return {};
}

double major_measure(const ArcDissection& d) {
  RealAccumulator acc;
  for (const auto& m : d.major_intervals()) acc.add(m.length());
  const double measure = acc.value();
  const double bound = 2.0 * static_cast<double>(d.Q()) / d.tau();
  if (measure > bound * (1.0 + 1e-12)) {
    throw NumericalError("major arc measure " + std::to_string(measure) + " exceeds 2Q/tau");
  }
  return measure;
}

std::uint64_t integrand_bandwidth(std::uint64_t N, std::span<const TrigPolynomial> factors) {
  std::uint64_t b = N;
  for (const auto& f : factors) b += f.max_frequency();
  return b;
}

namespace {

IntegralResult full_integral(std::uint64_t N, std::span<const TrigPolynomial> factors,
                             const IntegralOptions& options) {
  IntegralResult out;
  out.bandwidth = integrand_bandwidth(N, factors);
  const std::size_t needed = static_cast<std::size_t>(out.bandwidth) + 1;
  std::size_t M = options.samples;
  if (M == 0) {
    M = smooth_size(needed);
  } else if (M < needed) {
    throw DomainError("circle_integral: " + std::to_string(M) + " samples below bandwidth + 1 = " +
                      std::to_string(needed));
  }
  std::vector<cplx> product(M, cplx(1.0, 0.0));
  double bound = 1.0;
  for (const auto& f : factors) {
    const auto values = f.sample(M);
    for (std::size_t k = 0; k < M; ++k) product[k] *= values[k];
    bound *= f.l1_norm();
  }
  ComplexAccumulator acc;
  const std::uint64_t n_mod = N % M;
  const double md = static_cast<double>(M);
  for (std::size_t k = 0; k < M; ++k) {
    const std::uint64_t r = (M - mul_mod(n_mod, k, M)) % M;
    acc.add(product[k] * unit_root(static_cast<double>(r) / md));
  }
  out.value = acc.value() / md;
  out.exact = true;
  out.samples = M;
  constexpr double u = std::numeric_limits<double>::epsilon() / 2;
  out.error_estimate = 8.0 * u * (std::log2(md) + 1.0) * bound * static_cast<double>(factors.size() + 1);
  return out;
}

struct SimpsonState {
  std::span<const TrigPolynomial> factors;
  std::vector<int> alias;  // alias[i] = j < i when factor i equals factor j
  std::uint64_t N = 0;
  double tol_density = 0.0;
  std::size_t cap = 0;
  std::atomic<std::size_t>* subdivisions = nullptr;
  std::size_t evaluations = 0;
  bool cap_reached = false;

  cplx f(double alpha) {
    ++evaluations;
    const PhaseAccurateAlpha x = PhaseAccurateAlpha::from_real(alpha);
    std::vector<cplx> vals(factors.size());
    cplx prod(1.0, 0.0);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      vals[i] = alias[i] >= 0 ? vals[alias[i]] : factors[i].evaluate(x).value();
      prod *= vals[i];
    }
    return prod * x.negated().e(N);
  }

  // Returns the refined integral over [a,b]; adds |error| to err.
  cplx adapt(double a, double b, cplx fa, cplx fm, cplx fb, cplx whole, int depth, double& err) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const cplx flm = f(lm);
    const cplx frm = f(rm);
    const cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const cplx diff = left + right - whole;
    const double tol = tol_density * (b - a);
    const bool capped = subdivisions->fetch_add(1, std::memory_order_relaxed) >= cap;
    if (capped) cap_reached = true;
    if (std::abs(diff) <= 15.0 * tol || depth <= 0 || capped) {
      err += std::abs(diff) / 15.0;
      return left + right + diff / 15.0;
    }
    return adapt(a, m, fa, flm, fm, left, depth - 1, err) + adapt(m, b, fm, frm, fb, right, depth - 1, err);
  }
};

IntegralResult quadrature(std::uint64_t N, std::span<const TrigPolynomial> factors,
                          const std::vector<Interval>& pieces, const IntegralOptions& options) {
  IntegralResult out;
  out.bandwidth = integrand_bandwidth(N, factors);
  double bound = 1.0;
  for (const auto& f : factors) bound *= f.l1_norm();

  std::vector<int> alias(factors.size(), -1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (alias[j] < 0 && std::ranges::equal(factors[i].freqs(), factors[j].freqs()) &&
          std::ranges::equal(factors[i].coefs(), factors[j].coefs())) {
        alias[i] = static_cast<int>(j);
        break;
      }
    }
  }

  // Panels no wider than 1/(2B) so each resolves less than half an oscillation.
  const double max_width = 1.0 / (2.0 * static_cast<double>(std::max<std::uint64_t>(out.bandwidth, 1)));
  std::atomic<std::size_t> subdivisions{0};
  ComplexAccumulator total;
  RealAccumulator err_total;
  SimpsonState state{factors, alias, N, options.tolerance * bound, options.max_subdivisions, &subdivisions};
  for (const auto& piece : pieces) {
    if (piece.length() <= 0.0) continue;
    const auto panels = static_cast<std::size_t>(std::ceil(piece.length() / max_width));
    const double h = piece.length() / static_cast<double>(panels);
    cplx fa = state.f(piece.lo);
    for (std::size_t i = 0; i < panels; ++i) {
      const double a = piece.lo + h * static_cast<double>(i);
      const double b = (i + 1 == panels) ? piece.hi : piece.lo + h * static_cast<double>(i + 1);
      const cplx fm = state.f(0.5 * (a + b));
      const cplx fb = state.f(b);
      const cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
      double err = 0.0;
      total.add(state.adapt(a, b, fa, fm, fb, whole, 48, err));
      err_total.add(err);
      fa = fb;
    }
  }
  out.value = total.value();
  out.error_estimate = err_total.value() + total.error_budget();
  out.samples = state.evaluations;
  out.cap_reached = state.cap_reached;
  return out;
}

}  // namespace

IntegralResult circle_integral(std::uint64_t N, std::span<const TrigPolynomial> factors,
                               IntegralDomain domain, const ArcDissection* dissection,
                               const IntegralOptions& options) {
  if (domain == IntegralDomain::full) return full_integral(N, factors, options);
  if (dissection == nullptr) throw DomainError("circle_integral: arc integrals need a dissection");
  if (domain == IntegralDomain::major) {
    return quadrature(N, factors, dissection->major_intervals(), options);
  }
  return quadrature(N, factors, dissection->minor_intervals(), options);
}

IntegralResult circle_integral(std::uint64_t N, std::span<const SumSpec> factors, const PrimeSieve& sieve,
                               IntegralDomain domain, const ArcDissection* dissection,
                               const IntegralOptions& options) {
  std::vector<TrigPolynomial> polys;
  polys.reserve(factors.size());
  for (const auto& spec : factors) polys.push_back(TrigPolynomial::build(spec, N, sieve));
  return circle_integral(N, polys, domain, dissection, options);
}

}  // namespace pshua
