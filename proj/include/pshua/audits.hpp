#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pshua/gamma.hpp"
#include "pshua/phase.hpp"
#include "pshua/sieve.hpp"

namespace pshua {

// Farey fractions a/q (q <= max_q, 0 <= a < q) followed by `randoms` uniform
// points from a seeded generator.
struct AlphaGrid {
  std::vector<PhaseAccurateAlpha> points;
  std::string description;
};

AlphaGrid make_alpha_grid(unsigned max_q = 50, std::size_t randoms = 1000, std::uint64_t seed = 1);

struct ScaleRow {
  double scale = 0.0;  // N, a, H, ... depending on the audit
  double max_ratio = 0.0;
  std::string argmax;  // grid point attaining the max
};

struct BoundAuditReport {
  std::string lemma;
  std::string grid;
  std::vector<ScaleRow> rows;  // rows[0] is the calibration scale
  double slack = 0.5;
  double fitted_constant = 0.0;  // rows[0].max_ratio * (1 + slack)
  double max_ratio = 0.0;        // over the monitored rows
  bool pass = false;
  bool applicable = true;
  std::string note;
};

struct AuditSettings {
  std::uint64_t seed = 1;
  double slack = 0.5;
  double epsilon = 0.01;
  unsigned threads = 1;
  unsigned steps = 3;  // monitored scales 4x, 16x, 64x
};

// Fills fitted_constant, max_ratio and pass from rows.
void finalize_report(BoundAuditReport& report);

// --- exponential sums over primes -------------------------------------------

struct ShapePoint {
  double abs_sum = 0.0;
  double shape = 0.0;
  double ratio = 0.0;
  std::uint64_t q = 1;
};

// |S1(N,alpha)| / (N L^4 (q^-1/2 + N^-1/5 + q^1/2 N^-1/2)) with a/q from dirichlet_approx(alpha, N).
ShapePoint vaughan_ratio(std::uint64_t N, const PhaseAccurateAlpha& alpha, const PrimeSieve& sieve);
// |S3(N,alpha)| / (N^(1/3+eps) (1/q + N^-1/6 + q/N)^(1/16)).
ShapePoint harman_ratio(std::uint64_t N, const PhaseAccurateAlpha& alpha, const PrimeSieve& sieve,
                        double epsilon = 0.01);

// Calibration at N, monitoring at 4N, 16N, ... (settings.steps times).
BoundAuditReport audit_vaughan(std::uint64_t N, const AlphaGrid& grid, const PrimeSieve& sieve,
                               const AuditSettings& settings = {});
BoundAuditReport audit_harman(std::uint64_t N, const AlphaGrid& grid, const PrimeSieve& sieve,
                              const AuditSettings& settings = {});

// --- derivative tests --------------------------------------------------------

// f(x) = t * x^theta + shift
struct Monomial {
  double t = 1.0;
  double theta = 1.0;
  double shift = 0.0;

  double operator()(double x) const;
  // |f^(j)(x)| for x > 0
  double derivative_abs(unsigned j, double x) const;
};

// sum_{a < n <= b} e(f(n)) with compensated accumulation
cplx monomial_sum(const Monomial& f, std::uint64_t a, std::uint64_t b);

struct VdcPoint {
  double abs_sum = 0.0;
  double lambda1 = 0.0;
  double c2 = 0.0;
  bool second_derivative_ok = false;  // f'' hypothesis verifiable
  bool small_slope = false;           // c2 * lambda1 <= 1/2
  double shape_22 = 0.0;              // a^1/2 lambda1^1/2 + lambda1^-1
  double shape_23 = 0.0;              // lambda1^-1
  double ratio_22 = 0.0;
  double ratio_23 = 0.0;
};

// Requires 1 <= a < b <= 2a. Throws DomainError when neither branch has
// verifiable hypotheses (f' vanishing, or f'' vanishing with c2*lambda1 > 1/2).
VdcPoint audit_vdc(const Monomial& f, std::uint64_t a, std::uint64_t b);

struct KthPoint {
  double abs_sum = 0.0;
  double lambda_k = 0.0;
  double A = 0.0;
  double shape = 0.0;
  double ratio = 0.0;
};

// k >= 3, 1 <= a < b <= 2a, f^(k) nonvanishing on [a,b].
KthPoint audit_kth_derivative(const Monomial& f, unsigned k, std::uint64_t a, std::uint64_t b,
                              double epsilon = 0.01);

// --- counting lemmas -----------------------------------------------------------

// Ordered solutions of |h1 n1^alpha - h2 n2^alpha| <= delta with H < h <= 2H,
// N < n <= 2N. Ties are decided with a 4-ulp tolerance on the larger value.
std::uint64_t spacing_count(std::uint64_t H, std::uint64_t N, double delta, double alpha);
double spacing_shape(std::uint64_t H, std::uint64_t N, double delta, double alpha);

struct HeathBrownCheck {
  double identity_value = 0.0;
  double von_mangoldt = 0.0;
  bool holds = false;
};

// n <= 2 z^k required.
HeathBrownCheck heath_brown_identity_check(std::uint64_t n, double z, unsigned k);
double von_mangoldt(std::uint64_t n);

struct PowerTerm {
  double coef;
  double exponent;
};

struct GrahamKolesnikResult {
  double H = 0.0;
  double value = 0.0;       // L(H)
  double lemma_bound = 0.0; // three-term sum
  double constant = 0.0;    // m + n
  bool within = false;      // value <= constant * lemma_bound
};

// L(H) = sum A_i H^a_i + sum B_j H^-b_j on [H1, H2].
GrahamKolesnikResult graham_kolesnik_optimize(const std::vector<PowerTerm>& A, const std::vector<PowerTerm>& B,
                                              double H1, double H2);

struct MinSumPoint {
  double sum = 0.0;
  double B = 0.0;
  double Delta = 0.0;
  double shape = 0.0;
  double ratio = 0.0;
};

// sum_{N < n <= 2N} min(D, 1/||f(n)||) against (B+1)(D + 1/Delta) log(2 + 1/Delta),
// with B = max |f| and Delta = min |f'| on the range.
MinSumPoint audit_min_sum(const Monomial& f, double D, std::uint64_t N);

// --- Piatetski-Shapiro gap ----------------------------------------------------

struct T1GapReport {
  bool applicable = false;
  double max_gap_ratio = 0.0;  // max |T1 - S1| / N^(1-delta1)
  std::string argmax;
  double mean_square = 0.0;    // (1/M) sum_j |T1(j/M)|^2
  double weight_square_sum = 0.0;
  double mean_ratio = 0.0;     // mean_square / N^(2-gamma)
  std::size_t samples = 0;
};

T1GapReport audit_t1_gap(std::uint64_t N, const GammaParam& gamma, const mpq_class& delta1, const AlphaGrid& grid,
                         const PrimeSieve& sieve, unsigned threads = 1);

// --- calibrated suites -------------------------------------------------------

std::vector<std::string> audit_names();

// Calibrates at the base scale and monitors at 4^i times it. Audit names:
// vaughan, harman, vdc, kth-derivative, spacing, psi, min-sum, graham-kolesnik.
BoundAuditReport run_calibrated_audit(const std::string& name, const AuditSettings& settings,
                                      const PrimeSieve& sieve);

// Largest sieve limit any calibrated audit needs.
std::uint64_t audit_sieve_requirement(const AuditSettings& settings);

}  // namespace pshua
