#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "pshua/expsums.hpp"
#include "pshua/sieve.hpp"

namespace pshua {

// alpha = a/q + lambda with (a,q) = 1, 1 <= q <= tau, |lambda| <= 1/(q tau).
struct RationalApprox {
  std::int64_t a = 0;
  std::uint64_t q = 1;
  double lambda = 0.0;

  PhaseAccurateAlpha to_alpha() const;
};

// Scans the continued-fraction convergents of the exact binary value of alpha
// and keeps the last one with denominator <= tau.
RationalApprox dirichlet_approx(double alpha, double tau);

struct MajorArc {
  std::uint64_t a = 0;
  std::uint64_t q = 1;
  double center = 0.0;
  double halfwidth = 0.0;
  double lo = 0.0;  // clamped to the window
  double hi = 0.0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

// Farey dissection of the window [1/tau, 1 + 1/tau]: arcs M(a,q) =
// [a/q - 1/(q tau), a/q + 1/(q tau)] for 1 <= a <= q <= Q, (a,q) = 1.
class ArcDissection {
 public:
  // Q = floor(N^sigma) computed exactly, tau = N^(1-sigma); sigma in (0, 1/6].
  static ArcDissection from_sigma(std::uint64_t N, const mpq_class& sigma);
  // Explicit parameters; Q >= 1, tau >= 1.
  ArcDissection(std::uint64_t N, std::uint64_t Q, double tau);

  std::uint64_t N() const { return N_; }
  std::uint64_t Q() const { return Q_; }
  double tau() const { return tau_; }
  const std::optional<mpq_class>& sigma() const { return sigma_; }
  double window_lo() const { return 1.0 / tau_; }
  double window_hi() const { return 1.0 + 1.0 / tau_; }

  const std::vector<MajorArc>& arcs() const { return arcs_; }
  // Union of the arcs, sorted and merged.
  const std::vector<Interval>& major_intervals() const { return major_; }
  // Complement of the union inside the window.
  std::vector<Interval> minor_intervals() const;

 private:
  void build();

  std::uint64_t N_;
  std::uint64_t Q_;
  double tau_;
  std::optional<mpq_class> sigma_;
  std::vector<MajorArc> arcs_;
  std::vector<Interval> major_;
};

struct ArcClass {
  bool major = false;
  std::uint64_t a = 0;
  std::uint64_t q = 0;
};

// Major(a,q) when |alpha - a/q| <= 1/(q tau) for some arc (boundary included),
// otherwise Minor. alpha must lie in the window; DomainError otherwise.
ArcClass classify(double alpha, const ArcDissection& d);

// Exact length of the union of major arcs; checked against 2Q/tau.
double major_measure(const ArcDissection& d);

enum class IntegralDomain { full, major, minor };

struct IntegralOptions {
  // Uniform sample count for the full interval; 0 picks a smooth size >= B+1.
  std::size_t samples = 0;
  // Adaptive Simpson tolerance per interval, relative to the trivial bound of
  // the integrand times the interval length.
  double tolerance = 1e-8;
  // Cap on the total number of Simpson subdivisions.
  std::size_t max_subdivisions = 20'000'000;
};

struct IntegralResult {
  cplx value;
  double error_estimate = 0.0;
  bool exact = false;          // full-interval sampling result
  std::size_t samples = 0;     // uniform samples or integrand evaluations
  std::uint64_t bandwidth = 0;
  bool cap_reached = false;
};

// Bandwidth B = sum of maximal frequencies + N.
std::uint64_t integrand_bandwidth(std::uint64_t N, std::span<const TrigPolynomial> factors);

// Integral of prod(factors)(alpha) e(-N alpha). Over the full window the
// integrand is a trigonometric polynomial and M >= B+1 uniform samples give
// the integral exactly; fewer samples are refused with DomainError. Major and
// minor arcs use adaptive Simpson quadrature.
IntegralResult circle_integral(std::uint64_t N, std::span<const TrigPolynomial> factors,
                               IntegralDomain domain, const ArcDissection* dissection = nullptr,
                               const IntegralOptions& options = {});

IntegralResult circle_integral(std::uint64_t N, std::span<const SumSpec> factors, const PrimeSieve& sieve,
                               IntegralDomain domain, const ArcDissection* dissection = nullptr,
                               const IntegralOptions& options = {});

}  // namespace pshua
