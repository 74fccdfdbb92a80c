#include "pshua/audits.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "pshua/circle.hpp"
#include "pshua/errors.hpp"
#include "pshua/expsums.hpp"
#include "pshua/fft.hpp"
#include "pshua/integer.hpp"

namespace pshua {
namespace {

// Evaluates fn(i) for i < n on `threads` striped workers.
std::vector<double> parallel_map(std::size_t n, unsigned threads, const std::function<double(std::size_t)>& fn) {
  std::vector<double> out(n, 0.0);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += threads) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::size_t argmax(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

std::uint64_t scaled(std::uint64_t base, unsigned step) { return base << (2 * step); }

std::uint64_t denominator_for(const PhaseAccurateAlpha& alpha, double tau) {
  if (alpha.lambda() == 0.0 && static_cast<double>(alpha.q()) <= tau) return alpha.q();
  return dirichlet_approx(alpha.approx(), tau).q;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}


}  // namespace

AlphaGrid make_alpha_grid(unsigned max_q, std::size_t randoms, std::uint64_t seed) {
  AlphaGrid grid;
  for (std::uint64_t q = 1; q <= max_q; ++q) {
    for (std::uint64_t a = 0; a < q; ++a) {
      if (gcd_u64(a, q) == 1) grid.points.emplace_back(static_cast<std::int64_t>(a), q, 0.0);
    }
  }
  const std::size_t farey = grid.points.size();
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < randoms; ++i) {
    const double x = static_cast<double>(rng() >> 11) * 0x1p-53;
    grid.points.push_back(PhaseAccurateAlpha::from_real(x));
  }
  grid.description = "farey q<=" + std::to_string(max_q) + " (" + std::to_string(farey) + ") + " +
                     std::to_string(randoms) + " uniform (seed " + std::to_string(seed) + ")";
  return grid;
}

void finalize_report(BoundAuditReport& report) {
  if (report.rows.empty()) throw DomainError("audit report without rows");
  report.fitted_constant = report.rows.front().max_ratio * (1.0 + report.slack);
  report.max_ratio = 0.0;
  for (std::size_t i = 1; i < report.rows.size(); ++i) report.max_ratio = std::max(report.max_ratio, report.rows[i].max_ratio);
  report.pass = report.applicable && report.max_ratio <= report.fitted_constant;
}

ShapePoint vaughan_ratio(std::uint64_t N, const PhaseAccurateAlpha& alpha, const PrimeSieve& sieve) {
  if (N < 2) throw DomainError("vaughan_ratio: N must be at least 2");
  ShapePoint p;
  p.abs_sum = std::abs(eval_S1(N, alpha, sieve).value());
  const double n = static_cast<double>(N);
  p.q = denominator_for(alpha, n);
  const double q = static_cast<double>(p.q);
  const double L = std::log(n);
  p.shape = n * L * L * L * L * (1.0 / std::sqrt(q) + std::pow(n, -0.2) + std::sqrt(q / n));
  p.ratio = p.abs_sum / p.shape;
  return p;
}

ShapePoint harman_ratio(std::uint64_t N, const PhaseAccurateAlpha& alpha, const PrimeSieve& sieve, double epsilon) {
  if (N < 2) throw DomainError("harman_ratio: N must be at least 2");
  ShapePoint p;
  p.abs_sum = std::abs(eval_S3(N, alpha, sieve).value());
  const double n = static_cast<double>(N);
  p.q = denominator_for(alpha, n);
  const double q = static_cast<double>(p.q);
  p.shape = std::pow(n, 1.0 / 3.0 + epsilon) * std::pow(1.0 / q + std::pow(n, -1.0 / 6.0) + q / n, 1.0 / 16.0);
  p.ratio = p.abs_sum / p.shape;
  return p;
}

namespace {

BoundAuditReport grid_audit(const std::string& lemma, std::uint64_t N, const AlphaGrid& grid,
                            const AuditSettings& settings,
                            const std::function<double(std::uint64_t, const PhaseAccurateAlpha&)>& ratio) {
  BoundAuditReport r;
  r.lemma = lemma;
  r.grid = grid.description + ", N=" + std::to_string(N) + "*4^i, i<=" + std::to_string(settings.steps);
  r.slack = settings.slack;
  for (unsigned s = 0; s <= settings.steps; ++s) {
    const std::uint64_t n = scaled(N, s);
    const auto ratios = parallel_map(grid.points.size(), settings.threads,
                                     [&](std::size_t i) { return ratio(n, grid.points[i]); });
    const std::size_t best = argmax(ratios);
    r.rows.push_back({static_cast<double>(n), ratios[best], "alpha=" + grid.points[best].str()});
  }
  finalize_report(r);
  return r;
}

}  // namespace

BoundAuditReport audit_vaughan(std::uint64_t N, const AlphaGrid& grid, const PrimeSieve& sieve,
                               const AuditSettings& settings) {
  return grid_audit("vaughan", N, grid, settings, [&](std::uint64_t n, const PhaseAccurateAlpha& a) {
    return vaughan_ratio(n, a, sieve).ratio;
  });
}

BoundAuditReport audit_harman(std::uint64_t N, const AlphaGrid& grid, const PrimeSieve& sieve,
                              const AuditSettings& settings) {
  return grid_audit("harman", N, grid, settings, [&](std::uint64_t n, const PhaseAccurateAlpha& a) {
    return harman_ratio(n, a, sieve, settings.epsilon).ratio;
  });
}

double Monomial::operator()(double x) const { return t * std::pow(x, theta) + shift; }

double Monomial::derivative_abs(unsigned j, double x) const {
  double c = t;
  for (unsigned i = 0; i < j; ++i) c *= theta - static_cast<double>(i);
  return std::fabs(c) * std::pow(x, theta - static_cast<double>(j));
}

cplx monomial_sum(const Monomial& f, std::uint64_t a, std::uint64_t b) {
  ComplexAccumulator acc;
  for (std::uint64_t n = a + 1; n <= b; ++n) {
    const double v = f(static_cast<double>(n));
    acc.add(unit_root(v - std::floor(v)));
  }
  return acc.value();
}

namespace {

void check_dyadic(std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b <= a || b > 2 * a) throw DomainError("interval must satisfy 1 <= a < b <= 2a");
}

}  // namespace

VdcPoint audit_vdc(const Monomial& f, std::uint64_t a, std::uint64_t b) {
  check_dyadic(a, b);
  const double da = static_cast<double>(a), db = static_cast<double>(b);
  const double d1a = f.derivative_abs(1, da), d1b = f.derivative_abs(1, db);
  if (d1a == 0.0 || d1b == 0.0) throw DomainError("audit_vdc: f' vanishes, first-derivative hypothesis fails");
  VdcPoint p;
  p.lambda1 = d1a;
  p.c2 = std::max(d1a, d1b) / d1a;
  p.second_derivative_ok = f.derivative_abs(2, da) > 0.0 && f.derivative_abs(2, db) > 0.0;
  p.small_slope = p.c2 * p.lambda1 <= 0.5;
  if (!p.second_derivative_ok && !p.small_slope) {
    throw DomainError("audit_vdc: f'' vanishes and c2*lambda1 > 1/2, no verifiable branch");
  }
  p.abs_sum = std::abs(monomial_sum(f, a, b));
  if (p.second_derivative_ok) {
    p.shape_22 = std::sqrt(da * p.lambda1) + 1.0 / p.lambda1;
    p.ratio_22 = p.abs_sum / p.shape_22;
  }
  if (p.small_slope) {
    p.shape_23 = 1.0 / p.lambda1;
    p.ratio_23 = p.abs_sum / p.shape_23;
  }
  return p;
}

KthPoint audit_kth_derivative(const Monomial& f, unsigned k, std::uint64_t a, std::uint64_t b, double epsilon) {
  if (k < 3) throw DomainError("audit_kth_derivative: k must be at least 3");
  check_dyadic(a, b);
  const double da = static_cast<double>(a), db = static_cast<double>(b);
  const double lo = std::min(f.derivative_abs(k, da), f.derivative_abs(k, db));
  const double hi = std::max(f.derivative_abs(k, da), f.derivative_abs(k, db));
  if (lo == 0.0) throw DomainError("audit_kth_derivative: f^(k) vanishes");
  KthPoint p;
  p.lambda_k = lo;
  p.A = hi / lo;
  p.abs_sum = std::abs(monomial_sum(f, a, b));
  const double n = db - da;
  const double kk = static_cast<double>(k);
  const double e1 = 1.0 / (kk * (kk - 1.0));
  p.shape = std::pow(n, 1.0 + epsilon) *
            (std::pow(lo, e1) + std::pow(n, -e1) + std::pow(n, -2.0 * e1) * std::pow(lo, -2.0 / (kk * kk * (kk - 1.0))));
  p.ratio = p.abs_sum / p.shape;
  return p;
}

std::uint64_t spacing_count(std::uint64_t H, std::uint64_t N, double delta, double alpha) {
  if (H < 1 || N < 1) throw DomainError("spacing_count: H and N must be at least 1");
  if (delta < 0) throw DomainError("spacing_count: delta must be nonnegative");
  std::vector<double> v;
  v.reserve(H * N);
  for (std::uint64_t h = H + 1; h <= 2 * H; ++h) {
    for (std::uint64_t n = N + 1; n <= 2 * N; ++n) {
      v.push_back(static_cast<double>(h) * std::pow(static_cast<double>(n), alpha));
    }
  }
  std::sort(v.begin(), v.end());
  const double tol = 4.0 * DBL_EPSILON * v.back();
  std::uint64_t count = 0;
  for (const double x : v) {
    const auto lo = std::lower_bound(v.begin(), v.end(), x - delta - tol);
    const auto hi = std::upper_bound(v.begin(), v.end(), x + delta + tol);
    count += static_cast<std::uint64_t>(hi - lo);
  }
  return count;
}

double spacing_shape(std::uint64_t H, std::uint64_t N, double delta, double alpha) {
  const double hn = static_cast<double>(H) * static_cast<double>(N);
  return hn * std::log(2.0 * hn) + delta * static_cast<double>(H) * std::pow(static_cast<double>(N), 2.0 - alpha);
}

double von_mangoldt(std::uint64_t n) {
  if (n < 2) return 0.0;
  const auto f = factorize(n);
  return f.size() == 1 ? std::log(static_cast<double>(f.front().first)) : 0.0;
}

HeathBrownCheck heath_brown_identity_check(std::uint64_t n, double z, unsigned k) {
  if (n < 1 || z < 1.0 || k < 1) throw DomainError("heath_brown_identity_check: need n, z, k >= 1");
  if (static_cast<double>(n) > 2.0 * std::pow(z, static_cast<double>(k))) {
    throw DomainError("heath_brown_identity_check: n exceeds 2 z^k");
  }
  const auto divs = divisors(n);
  const std::size_t D = divs.size();
  auto index = [&](std::uint64_t d) {
    return static_cast<std::size_t>(std::lower_bound(divs.begin(), divs.end(), d) - divs.begin());
  };
  auto conv = [&](const std::vector<double>& f, const std::vector<double>& g) {
    std::vector<double> h(D, 0.0);
    for (std::size_t i = 0; i < D; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        if (divs[i] % divs[j] == 0) h[i] += f[j] * g[index(divs[i] / divs[j])];
      }
    }
    return h;
  };
  std::vector<double> log_f(D), ones(D, 1.0), mu_z(D);
  for (std::size_t i = 0; i < D; ++i) {
    log_f[i] = std::log(static_cast<double>(divs[i]));
    mu_z[i] = static_cast<double>(divs[i]) <= z ? moebius(divs[i]) : 0.0;
  }
  double total = 0.0;
  double binom = 1.0;
  std::vector<double> head = log_f;  // log * 1^(j-1)
  std::vector<double> tail = mu_z;   // mu_z^j
  for (unsigned j = 1; j <= k; ++j) {
    binom = binom * static_cast<double>(k - j + 1) / static_cast<double>(j);
    const double term = conv(head, tail)[D - 1];
    total += (j % 2 == 1 ? 1.0 : -1.0) * binom * term;
    head = conv(head, ones);
    tail = conv(tail, mu_z);
  }
  HeathBrownCheck out;
  out.identity_value = total;
  out.von_mangoldt = von_mangoldt(n);
  out.holds = std::fabs(total - out.von_mangoldt) <= 1e-9;
  return out;
}

GrahamKolesnikResult graham_kolesnik_optimize(const std::vector<PowerTerm>& A, const std::vector<PowerTerm>& B,
                                              double H1, double H2) {
  if (A.empty() && B.empty()) throw DomainError("graham_kolesnik_optimize: no terms");
  if (!(H1 > 0.0) || H1 > H2) throw DomainError("graham_kolesnik_optimize: need 0 < H1 <= H2");
  for (const auto& t : A) {
    if (!(t.coef > 0.0) || !(t.exponent > 0.0)) throw DomainError("graham_kolesnik_optimize: nonpositive A term");
  }
  for (const auto& t : B) {
    if (!(t.coef > 0.0) || !(t.exponent > 0.0)) throw DomainError("graham_kolesnik_optimize: nonpositive B term");
  }
  auto L = [&](double H) {
    double s = 0.0;
    for (const auto& t : A) s += t.coef * std::pow(H, t.exponent);
    for (const auto& t : B) s += t.coef * std::pow(H, -t.exponent);
    return s;
  };
  std::vector<double> candidates = {H1, H2};
  double cross = 0.0;
  for (const auto& ta : A) {
    for (const auto& tb : B) {
      const double s = ta.exponent + tb.exponent;
      candidates.push_back(std::exp((std::log(tb.coef) - std::log(ta.coef)) / s));
      candidates.push_back(std::exp((std::log(tb.exponent * tb.coef) - std::log(ta.exponent * ta.coef)) / s));
      cross += std::exp((tb.exponent * std::log(ta.coef) + ta.exponent * std::log(tb.coef)) / s);
    }
  }
  GrahamKolesnikResult r;
  r.H = H1;
  r.value = L(H1);
  for (double h : candidates) {
    h = std::clamp(h, H1, H2);
    const double v = L(h);
    if (v < r.value) {
      r.value = v;
      r.H = h;
    }
  }
  double edge = 0.0;
  for (const auto& t : A) edge += t.coef * std::pow(H1, t.exponent);
  for (const auto& t : B) edge += t.coef * std::pow(H2, -t.exponent);
  r.lemma_bound = edge + cross;
  r.constant = static_cast<double>(A.size() + B.size());
  r.within = r.value <= r.constant * r.lemma_bound;
  return r;
}

MinSumPoint audit_min_sum(const Monomial& f, double D, std::uint64_t N) {
  if (N < 1 || !(D > 0.0)) throw DomainError("audit_min_sum: need N >= 1 and D > 0");
  const double lo = static_cast<double>(N), hi = 2.0 * lo;
  MinSumPoint p;
  p.B = std::max(std::fabs(f(lo)), std::fabs(f(hi)));
  p.Delta = std::min(f.derivative_abs(1, lo), f.derivative_abs(1, hi));
  if (p.Delta == 0.0) throw DomainError("audit_min_sum: f' vanishes");
  RealAccumulator acc;
  for (std::uint64_t n = N + 1; n <= 2 * N; ++n) {
    const double dist = nearest_int_distance(f(static_cast<double>(n)));
    acc.add(dist == 0.0 ? D : std::min(D, 1.0 / dist));
  }
  p.sum = acc.value();
  p.shape = (p.B + 1.0) * (D + 1.0 / p.Delta) * std::log(2.0 + 1.0 / p.Delta);
  p.ratio = p.sum / p.shape;
  return p;
}

T1GapReport audit_t1_gap(std::uint64_t N, const GammaParam& gamma, const mpq_class& delta1, const AlphaGrid& grid,
                         const PrimeSieve& sieve, unsigned threads) {
  T1GapReport r;
  r.applicable = delta1 > 0 && 73 * (1 - gamma.rational()) + 86 * delta1 < 9;
  if (!r.applicable) return r;
  const TrigPolynomial t1 = TrigPolynomial::build({SumKind::T1, gamma}, N, sieve);
  const TrigPolynomial s1 = TrigPolynomial::build({SumKind::S1, GammaParam::one()}, N, sieve);
  const double scale = std::pow(static_cast<double>(N), 1.0 - delta1.get_d());
  const auto gaps = parallel_map(grid.points.size(), threads, [&](std::size_t i) {
    return std::abs(t1.evaluate(grid.points[i]).value() - s1.evaluate(grid.points[i]).value()) / scale;
  });
  const std::size_t best = argmax(gaps);
  r.max_gap_ratio = gaps[best];
  r.argmax = "alpha=" + grid.points[best].str();
  r.samples = smooth_size(2 * N + 1);
  const auto samples = t1.sample(r.samples);
  RealAccumulator acc;
  for (const auto& s : samples) acc.add(std::norm(s));
  r.mean_square = acc.value() / static_cast<double>(r.samples);
  r.weight_square_sum = t1.l2_norm_squared();
  r.mean_ratio = r.mean_square / std::pow(static_cast<double>(N), 2.0 - gamma.value());
  return r;
}

std::vector<std::string> audit_names() {
  return {"vaughan", "harman", "vdc", "kth-derivative", "spacing", "psi", "min-sum", "graham-kolesnik"};
}

namespace {

constexpr std::uint64_t kVaughanBase = 2000;
constexpr std::uint64_t kHarmanBase = 100000;

// Generic scale loop: rows[s] = max over points of ratio(scale_s, point).
BoundAuditReport scale_audit(const std::string& lemma, const std::string& grid, std::uint64_t base,
                             std::size_t points, const AuditSettings& settings,
                             const std::function<double(std::uint64_t, std::size_t)>& ratio,
                             const std::function<std::string(std::uint64_t, std::size_t)>& label) {
  BoundAuditReport r;
  r.lemma = lemma;
  r.grid = grid + ", scale " + std::to_string(base) + "*4^i, i<=" + std::to_string(settings.steps);
  r.slack = settings.slack;
  for (unsigned s = 0; s <= settings.steps; ++s) {
    const std::uint64_t scale = scaled(base, s);
    const auto ratios = parallel_map(points, settings.threads, [&](std::size_t i) { return ratio(scale, i); });
    const std::size_t best = argmax(ratios);
    r.rows.push_back({static_cast<double>(scale), ratios[best], label(scale, best)});
  }
  finalize_report(r);
  return r;
}

// (theta, lambda-target) pairs for the second-derivative family
struct VdcCase {
  double theta, lambda1;
};

const std::vector<VdcCase>& vdc_cases() {
  static const std::vector<VdcCase> cases = {
      {0.5, 0.05}, {0.5, 0.3}, {0.5, 2.0}, {0.5, 10.0}, {0.75, 0.05}, {0.75, 0.3},
      {0.75, 2.0}, {0.75, 10.0}, {1.5, 0.05}, {1.5, 0.3}, {1.5, 2.0}, {1.5, 10.0}};
  return cases;
}

Monomial monomial_with_slope(double theta, double lambda1, double a) {
  return Monomial{lambda1 / (theta * std::pow(a, theta - 1.0)), theta, 0.0};
}

struct KthCase {
  double theta, beta;  // lambda_3 = a^-beta
};

const std::vector<KthCase>& kth_cases() {
  static const std::vector<KthCase> cases = {{0.5, 1.5}, {0.5, 2.0}, {0.5, 2.5}, {0.5, 3.0},
                                             {1.5, 1.5}, {1.5, 2.0}, {1.5, 2.5}, {1.5, 3.0}};
  return cases;
}

Monomial monomial_with_third(double theta, double beta, double a) {
  const double falling = std::fabs(theta * (theta - 1.0) * (theta - 2.0));
  return Monomial{std::pow(a, -beta) / (falling * std::pow(a, theta - 3.0)), theta, 0.0};
}

struct SpacingCase {
  double alpha, delta;
};

const std::vector<SpacingCase>& spacing_cases() {
  static const std::vector<SpacingCase> cases = [] {
    std::vector<SpacingCase> c;
    for (double alpha : {0.6, 0.75, 0.9}) {
      for (double delta : {0.0, 0.01, 0.1, 1.0, 10.0}) c.push_back({alpha, delta});
    }
    return c;
  }();
  return cases;
}

constexpr std::uint64_t kSpacingH = 8;

struct MinSumCase {
  double theta, delta, D;
};

const std::vector<MinSumCase>& min_sum_cases() {
  static const std::vector<MinSumCase> cases = [] {
    std::vector<MinSumCase> c;
    for (double theta : {0.5, 1.5}) {
      for (double delta : {0.003, 0.03, 0.3}) {
        for (double D : {10.0, 100.0}) c.push_back({theta, delta, D});
      }
    }
    return c;
  }();
  return cases;
}

// Slope at the left end equals delta; for theta > 1 the slope grows so the
// minimum over the range stays at the left end.
Monomial monomial_with_min_slope(double theta, double delta, double N) {
  const double left = theta > 1.0 ? N : 2.0 * N;
  return Monomial{delta / (theta * std::pow(left, theta - 1.0)), theta, 0.0};
}

struct GkInstance {
  std::vector<PowerTerm> A, B;
  double H1, span;
};

std::vector<GkInstance> gk_instances(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1p-53; };
  std::vector<GkInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    GkInstance g;
    const std::size_t m = 1 + rng() % 3, n = 1 + rng() % 3;
    for (std::size_t j = 0; j < m; ++j) g.A.push_back({std::exp(10.0 * unit() - 5.0), 0.1 + 2.9 * unit()});
    for (std::size_t j = 0; j < n; ++j) g.B.push_back({std::exp(10.0 * unit() - 5.0), 0.1 + 2.9 * unit()});
    g.H1 = std::exp(3.0 * unit());
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

BoundAuditReport run_calibrated_audit(const std::string& name, const AuditSettings& settings,
                                      const PrimeSieve& sieve) {
  if (name == "vaughan") {
    return audit_vaughan(kVaughanBase, make_alpha_grid(50, 1000, settings.seed), sieve, settings);
  }
  if (name == "harman") {
    return audit_harman(kHarmanBase, make_alpha_grid(50, 1000, settings.seed), sieve, settings);
  }
  if (name == "vdc") {
    const auto& cases = vdc_cases();
    return scale_audit(
        "vdc", "t*x^theta on (a,2a], theta in {1/2,3/4,3/2}, lambda1 in {0.05,0.3,2,10}", 1000, cases.size(),
        settings,
        [&](std::uint64_t a, std::size_t i) {
          const auto p = audit_vdc(monomial_with_slope(cases[i].theta, cases[i].lambda1, static_cast<double>(a)), a,
                                   2 * a);
          return std::max(p.ratio_22, p.ratio_23);
        },
        [&](std::uint64_t, std::size_t i) {
          return "theta=" + fmt(cases[i].theta) + " lambda1=" + fmt(cases[i].lambda1);
        });
  }
  if (name == "kth-derivative") {
    const auto& cases = kth_cases();
    return scale_audit(
        "kth-derivative", "k=3, t*x^theta on (a,2a], theta in {1/2,3/2}, lambda3 = a^-beta", 1000, cases.size(),
        settings,
        [&](std::uint64_t a, std::size_t i) {
          return audit_kth_derivative(monomial_with_third(cases[i].theta, cases[i].beta, static_cast<double>(a)), 3, a,
                                      2 * a, settings.epsilon)
              .ratio;
        },
        [&](std::uint64_t, std::size_t i) {
          return "theta=" + fmt(cases[i].theta) + " beta=" + fmt(cases[i].beta);
        });
  }
  if (name == "spacing") {
    const auto& cases = spacing_cases();
    return scale_audit(
        "spacing", "H=" + std::to_string(kSpacingH) + ", alpha in {0.6,0.75,0.9}, delta in {0,0.01,0.1,1,10}", 32,
        cases.size(), settings,
        [&](std::uint64_t N, std::size_t i) {
          const auto& c = cases[i];
          return static_cast<double>(spacing_count(kSpacingH, N, c.delta, c.alpha)) /
                 spacing_shape(kSpacingH, N, c.delta, c.alpha);
        },
        [&](std::uint64_t, std::size_t i) {
          return "alpha=" + fmt(cases[i].alpha) + " delta=" + fmt(cases[i].delta);
        });
  }
  if (name == "psi") {
    const AlphaGrid grid = make_alpha_grid(50, 1000, settings.seed);
    return scale_audit(
        "psi", grid.description, 16, grid.points.size(), settings,
        [&](std::uint64_t H, std::size_t i) {
          const auto p = psi_truncation_audit(grid.points[i].approx(), H);
          return p.lhs_error / p.g;
        },
        [&](std::uint64_t, std::size_t i) { return "theta=" + grid.points[i].str(); });
  }
  if (name == "min-sum") {
    const auto& cases = min_sum_cases();
    return scale_audit(
        "min-sum", "t*n^theta on (N,2N], theta in {1/2,3/2}, Delta in {0.003,0.03,0.3}, D in {10,100}", 1000,
        cases.size(), settings,
        [&](std::uint64_t N, std::size_t i) {
          const auto& c = cases[i];
          return audit_min_sum(monomial_with_min_slope(c.theta, c.delta, static_cast<double>(N)), c.D, N).ratio;
        },
        [&](std::uint64_t, std::size_t i) {
          return "theta=" + fmt(cases[i].theta) + " Delta=" + fmt(cases[i].delta) + " D=" + fmt(cases[i].D);
        });
  }
  if (name == "graham-kolesnik") {
    const auto instances = gk_instances(settings.seed, 1000);
    return scale_audit(
        "graham-kolesnik", "1000 random instances, m,n<=3, H2/H1 = span", 10, instances.size(), settings,
        [&](std::uint64_t span, std::size_t i) {
          const auto& g = instances[i];
          const auto r = graham_kolesnik_optimize(g.A, g.B, g.H1, g.H1 * static_cast<double>(span));
          return r.value / r.lemma_bound;
        },
        [&](std::uint64_t, std::size_t i) { return "instance " + std::to_string(i); });
  }
  throw DomainError("unknown audit '" + name + "'");
}

std::uint64_t audit_sieve_requirement(const AuditSettings& settings) {
  return std::max(scaled(kVaughanBase, settings.steps), icbrt(scaled(kHarmanBase, settings.steps)) + 1);
}

}  // namespace pshua
