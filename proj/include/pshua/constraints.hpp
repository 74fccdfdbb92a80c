#pragma once

#include <array>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pshua {

// Exact parameter tuple for the admissibility system. gamma in (0,1], delta in (0,1).
struct ParamTuple {
  mpq_class gamma1, gamma2, gamma3;
  mpq_class delta1, delta3;

  ParamTuple(mpq_class g1, mpq_class g2, mpq_class g3, mpq_class d1, mpq_class d3);
};

// as_stated uses delta1/40 in the first constraint, as_proved uses delta1/32.
enum class Variant { as_stated, as_proved };

std::string to_string(Variant v);
Variant parse_variant(const std::string& text);

struct ConstraintSlack {
  std::string name;
  mpq_class slack;  // lhs - rhs oriented so that slack > 0 means satisfied
};

struct ConstraintReport {
  bool admissible = false;
  std::vector<ConstraintSlack> constraints;
};

ConstraintReport check_theorem_constraints(const ParamTuple& t, Variant variant = Variant::as_proved);

// Linear constraint  sum coef[i]*x[i] + constant  > 0  (or >= 0 when !strict).
struct LinearConstraint {
  std::vector<mpq_class> coef;
  mpq_class constant;
  bool strict = true;
};

// Fourier-Motzkin elimination of variable `var`; the result no longer involves it.
std::vector<LinearConstraint> eliminate(const std::vector<LinearConstraint>& system, std::size_t var);

// Bounds on a single remaining variable after all others were eliminated.
struct UnivariateBounds {
  bool feasible = true;
  bool has_lower = false, has_upper = false;
  mpq_class lower, upper;
  bool lower_strict = false, upper_strict = false;
};

UnivariateBounds univariate_bounds(const std::vector<LinearConstraint>& system, std::size_t var);

enum class Scenario { equal_gammas, unit_linear_gammas, gamma3_free };

std::string to_string(Scenario s);
Scenario parse_scenario(const std::string& text);

// gamma > gamma_lower, equivalently 1 - gamma < one_minus_bound. For the
// gamma3-free scenario the bound concerns gamma3 with gamma1 = gamma2 at the
// equal-gammas threshold of the same variant.
struct GammaThreshold {
  Scenario scenario;
  Variant variant;
  mpq_class gamma_lower;
  mpq_class one_minus_bound;
  std::string binding;  // which constraint fixes the threshold
};

GammaThreshold solve_gamma_threshold(Scenario scenario, Variant variant = Variant::as_proved);

struct ExponentTable {
  mpq_class gamma, delta;
  std::array<mpq_class, 9> a_i;
  mpq_class a;  // min of a_i (epsilon carried as strictness)
  mpq_class b;  // 24(1-gamma) + 24 delta
  mpq_class c;  // gamma - 2 delta
  bool precondition = false;  // 16(1-gamma) + 16 delta < 1
  bool b_below_two_thirds = false;
  bool b_below_a = false;
  bool window_nonempty = false;  // 1 - c < c - b
  bool feasible() const { return precondition && b_below_two_thirds && b_below_a && window_nonempty; }
};

ExponentTable type_I_exponents(const mpq_class& gamma, const mpq_class& delta);

}  // namespace pshua
