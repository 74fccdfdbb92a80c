#include "pshua/constraints.hpp"

#include <algorithm>

#include "pshua/errors.hpp"
#include "pshua/integer.hpp"

namespace pshua {
namespace {

bool in_gamma_range(const mpq_class& g) { return g > 0 && g <= 1; }
bool in_delta_range(const mpq_class& d) { return d > 0 && d < 1; }

// Variables of the full system: u1, u2, u3 (u = 1 - gamma), d1, d3.
constexpr std::size_t kU1 = 0, kU2 = 1, kU3 = 2, kD1 = 3, kD3 = 4, kVars = 5;

struct Labeled {
  LinearConstraint c;
  std::string label;
};

LinearConstraint make(std::initializer_list<std::pair<std::size_t, mpq_class>> terms, mpq_class constant,
                      bool strict, std::size_t nvars = kVars) {
  LinearConstraint c;
  c.coef.assign(nvars, mpq_class(0));
  for (const auto& [i, v] : terms) c.coef[i] = v;
  c.constant = constant;
  c.strict = strict;
  return c;
}

mpq_class first_coefficient(Variant v) { return v == Variant::as_stated ? mpq_class(1, 40) : mpq_class(1, 32); }

// (g1+g2)/2 + d1/w > 1  ->  -(u1+u2)/2 + d1/w > 0, and so on.
std::vector<Labeled> theorem_system(Variant variant) {
  const mpq_class half(1, 2);
  std::vector<Labeled> sys;
  sys.push_back({make({{kU1, -half}, {kU2, -half}, {kD1, first_coefficient(variant)}}, 0, true), "mean-delta1"});
  sys.push_back({make({{kU1, -half}, {kU2, -half}, {kD3, mpq_class(1, 3)}}, 0, true), "mean-delta3"});
  sys.push_back({make({{kU1, -73}, {kD1, -86}}, 9, true), "linear-gamma1"});
  sys.push_back({make({{kU2, -73}, {kD1, -86}}, 9, true), "linear-gamma2"});
  sys.push_back({make({{kU3, -1714}, {kD3, -1725}}, 46, true), "cubic-gamma3"});
  for (std::size_t u : {kU1, kU2, kU3}) {
    sys.push_back({make({{u, 1}}, 0, false), "gamma<=1"});
    sys.push_back({make({{u, -1}}, 1, true), "gamma>0"});
  }
  for (std::size_t d : {kD1, kD3}) {
    sys.push_back({make({{d, 1}}, 0, true), "delta>0"});
    sys.push_back({make({{d, -1}}, 1, true), "delta<1"});
  }
  return sys;
}

// Rewrites the system in new variables: old[i] = sum map[i].first[j]*new[j] + map[i].second.
std::vector<Labeled> substitute(const std::vector<Labeled>& sys,
                                const std::vector<std::pair<std::vector<mpq_class>, mpq_class>>& map,
                                std::size_t new_vars) {
  std::vector<Labeled> out;
  for (const auto& l : sys) {
    Labeled n{make({}, l.c.constant, l.c.strict, new_vars), l.label};
    for (std::size_t i = 0; i < l.c.coef.size(); ++i) {
      if (l.c.coef[i] == 0) continue;
      for (std::size_t j = 0; j < new_vars; ++j) n.c.coef[j] += l.c.coef[i] * map[i].first[j];
      n.c.constant += l.c.coef[i] * map[i].second;
    }
    out.push_back(std::move(n));
  }
  return out;
}

std::vector<Labeled> eliminate_labeled(const std::vector<Labeled>& sys, std::size_t var) {
  std::vector<Labeled> keep, pos, neg;
  for (const auto& l : sys) {
    const int s = sgn(l.c.coef[var]);
    (s > 0 ? pos : s < 0 ? neg : keep).push_back(l);
  }
  for (const auto& p : pos) {
    for (const auto& n : neg) {
      const mpq_class wp = -n.c.coef[var];
      const mpq_class wn = p.c.coef[var];
      Labeled combined{make({}, wp * p.c.constant + wn * n.c.constant, p.c.strict || n.c.strict, p.c.coef.size()),
                       p.label + " & " + n.label};
      for (std::size_t j = 0; j < p.c.coef.size(); ++j) combined.c.coef[j] = wp * p.c.coef[j] + wn * n.c.coef[j];
      combined.c.coef[var] = 0;
      keep.push_back(std::move(combined));
    }
  }
  return keep;
}

struct LabeledBounds {
  UnivariateBounds bounds;
  std::string upper_label;
};

LabeledBounds bounds_labeled(const std::vector<Labeled>& sys, std::size_t var) {
  LabeledBounds out;
  UnivariateBounds& b = out.bounds;
  for (const auto& l : sys) {
    for (std::size_t j = 0; j < l.c.coef.size(); ++j) {
      if (j != var && l.c.coef[j] != 0) throw DomainError("univariate_bounds: other variables still present");
    }
    const mpq_class& a = l.c.coef[var];
    if (a == 0) {
      if (l.c.constant < 0 || (l.c.strict && l.c.constant == 0)) b.feasible = false;
      continue;
    }
    const mpq_class root = -l.c.constant / a;
    if (a > 0) {
      if (!b.has_lower || root > b.lower || (root == b.lower && l.c.strict)) {
        b.lower = root;
        b.lower_strict = l.c.strict;
        b.has_lower = true;
      }
    } else {
      if (!b.has_upper || root < b.upper || (root == b.upper && l.c.strict)) {
        b.upper = root;
        b.upper_strict = l.c.strict;
        b.has_upper = true;
        out.upper_label = l.label;
      }
    }
  }
  if (b.has_lower && b.has_upper) {
    if (b.lower > b.upper || (b.lower == b.upper && (b.lower_strict || b.upper_strict))) b.feasible = false;
  }
  return out;
}

std::vector<mpq_class> unit(std::size_t j, std::size_t n) {
  std::vector<mpq_class> v(n, mpq_class(0));
  v[j] = 1;
  return v;
}

std::vector<mpq_class> zeros(std::size_t n) { return std::vector<mpq_class>(n, mpq_class(0)); }

}  // namespace

ParamTuple::ParamTuple(mpq_class g1, mpq_class g2, mpq_class g3, mpq_class d1, mpq_class d3)
    : gamma1(std::move(g1)), gamma2(std::move(g2)), gamma3(std::move(g3)), delta1(std::move(d1)),
      delta3(std::move(d3)) {
  if (!in_gamma_range(gamma1) || !in_gamma_range(gamma2) || !in_gamma_range(gamma3)) {
    throw DomainError("gamma must lie in (0,1]");
  }
  if (!in_delta_range(delta1) || !in_delta_range(delta3)) throw DomainError("delta must lie in (0,1)");
}

std::string to_string(Variant v) { return v == Variant::as_stated ? "as-stated" : "as-proved"; }

Variant parse_variant(const std::string& text) {
  if (text == "as-stated") return Variant::as_stated;
  if (text == "as-proved") return Variant::as_proved;
  throw DomainError("unknown variant '" + text + "' (expected as-stated or as-proved)");
}

ConstraintReport check_theorem_constraints(const ParamTuple& t, Variant variant) {
  ConstraintReport r;
  const mpq_class mean = (t.gamma1 + t.gamma2) / 2;
  r.constraints.push_back({"mean-delta1", mean + t.delta1 * first_coefficient(variant) - 1});
  r.constraints.push_back({"mean-delta3", mean + t.delta3 / 3 - 1});
  r.constraints.push_back({"linear-gamma1", 9 - (73 * (1 - t.gamma1) + 86 * t.delta1)});
  r.constraints.push_back({"linear-gamma2", 9 - (73 * (1 - t.gamma2) + 86 * t.delta1)});
  r.constraints.push_back({"cubic-gamma3", 46 - (1714 * (1 - t.gamma3) + 1725 * t.delta3)});
  r.admissible = std::all_of(r.constraints.begin(), r.constraints.end(),
                             [](const ConstraintSlack& c) { return c.slack > 0; });
  return r;
}

std::vector<LinearConstraint> eliminate(const std::vector<LinearConstraint>& system, std::size_t var) {
  std::vector<Labeled> sys;
  for (const auto& c : system) sys.push_back({c, ""});
  std::vector<LinearConstraint> out;
  for (auto& l : eliminate_labeled(sys, var)) out.push_back(std::move(l.c));
  return out;
}

UnivariateBounds univariate_bounds(const std::vector<LinearConstraint>& system, std::size_t var) {
  std::vector<Labeled> sys;
  for (const auto& c : system) sys.push_back({c, ""});
  return bounds_labeled(sys, var).bounds;
}

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::equal_gammas: return "equal-gammas";
    case Scenario::unit_linear_gammas: return "unit-linear-gammas";
    case Scenario::gamma3_free: return "gamma3-free";
  }
  return "?";
}

Scenario parse_scenario(const std::string& text) {
  if (text == "equal-gammas") return Scenario::equal_gammas;
  if (text == "unit-linear-gammas") return Scenario::unit_linear_gammas;
  if (text == "gamma3-free") return Scenario::gamma3_free;
  throw DomainError("unknown scenario '" + text + "'");
}

GammaThreshold solve_gamma_threshold(Scenario scenario, Variant variant) {
  const auto full = theorem_system(variant);
  GammaThreshold out{scenario, variant, 0, 0, ""};
  LabeledBounds lb;
  if (scenario == Scenario::equal_gammas) {
    // new variables (u, d1, d3)
    const std::size_t n = 3;
    std::vector<std::pair<std::vector<mpq_class>, mpq_class>> map = {
        {unit(0, n), 0}, {unit(0, n), 0}, {unit(0, n), 0}, {unit(1, n), 0}, {unit(2, n), 0}};
    auto sys = eliminate_labeled(eliminate_labeled(substitute(full, map, n), 1), 2);
    lb = bounds_labeled(sys, 0);
  } else if (scenario == Scenario::unit_linear_gammas) {
    // new variables (u3, d1, d3) with gamma1 = gamma2 = 1
    const std::size_t n = 3;
    std::vector<std::pair<std::vector<mpq_class>, mpq_class>> map = {
        {zeros(n), 0}, {zeros(n), 0}, {unit(0, n), 0}, {unit(1, n), 0}, {unit(2, n), 0}};
    auto sys = eliminate_labeled(eliminate_labeled(substitute(full, map, n), 1), 2);
    lb = bounds_labeled(sys, 0);
  } else {
    // new variables (u, u3, d1, d3); gamma1 = gamma2 pinned at the equal-gammas
    // threshold, strict inequalities closed since that point itself is excluded
    const std::size_t n = 4;
    std::vector<std::pair<std::vector<mpq_class>, mpq_class>> map = {
        {unit(0, n), 0}, {unit(0, n), 0}, {unit(1, n), 0}, {unit(2, n), 0}, {unit(3, n), 0}};
    auto sys = eliminate_labeled(eliminate_labeled(substitute(full, map, n), 2), 3);
    const mpq_class u_star = solve_gamma_threshold(Scenario::equal_gammas, variant).one_minus_bound;
    for (auto& l : sys) {
      l.c.constant += l.c.coef[0] * u_star;
      l.c.coef[0] = 0;
      l.c.strict = l.c.coef[1] != 0 && l.c.strict;
    }
    lb = bounds_labeled(sys, 1);
  }
  if (!lb.bounds.feasible || !lb.bounds.has_upper) {
    throw NumericalError("threshold elimination produced no upper bound");
  }
  out.one_minus_bound = lb.bounds.upper;
  out.gamma_lower = 1 - lb.bounds.upper;
  out.binding = lb.upper_label;
  return out;
}

ExponentTable type_I_exponents(const mpq_class& gamma, const mpq_class& delta) {
  if (!in_gamma_range(gamma)) throw DomainError("gamma must lie in (0,1]");
  if (delta < 0 || delta >= 1) throw DomainError("delta must lie in [0,1)");
  const mpq_class u = 1 - gamma;
  const mpq_class& d = delta;
  ExponentTable t;
  t.gamma = gamma;
  t.delta = delta;
  auto row = [&](long p, long q, long cu, long cd, long den) {
    mpq_class head(p, q), cu_r(cu, den), cd_r(cd, den);
    head.canonicalize();
    cu_r.canonicalize();
    cd_r.canonicalize();
    return mpq_class(head - cu_r * u - cd_r * d);
  };
  t.a_i[0] = row(3, 2, 19, 19, 1);
  t.a_i[1] = row(12, 11, 144, 144, 11);
  t.a_i[2] = row(1, 1, 35, 35, 3);
  t.a_i[3] = row(18, 17, 192, 192, 17);
  t.a_i[4] = row(13, 11, 118, 118, 11);
  t.a_i[5] = row(24, 23, 216, 216, 23);
  t.a_i[6] = row(26, 29, 194, 201, 29);
  t.a_i[7] = row(24, 29, 180, 186, 29);
  t.a_i[8] = row(46, 57, 346, 357, 57);
  for (auto& a : t.a_i) a.canonicalize();
  t.a = *std::min_element(t.a_i.begin(), t.a_i.end());
  t.b = 24 * u + 24 * d;
  t.c = gamma - 2 * d;
  t.b.canonicalize();
  t.c.canonicalize();
  t.precondition = 16 * u + 16 * d < 1;
  t.b_below_two_thirds = t.b < mpq_class(2, 3);
  t.b_below_a = t.b < t.a;
  t.window_nonempty = 1 - t.c < t.c - t.b;
  return t;
}

}  // namespace pshua
