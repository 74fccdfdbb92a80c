#include <doctest.h>

#include "pshua/constraints.hpp"
#include "pshua/errors.hpp"
#include "pshua/integer.hpp"

using namespace pshua;

namespace {

mpq_class Q(const char* s) { return parse_fraction(s); }

}  // namespace

TEST_CASE("tuple validation") {
  CHECK_THROWS_AS(ParamTuple(Q("0"), 1, 1, Q("1/2"), Q("1/2")), DomainError);
  CHECK_THROWS_AS(ParamTuple(1, Q("11/10"), 1, Q("1/2"), Q("1/2")), DomainError);
  CHECK_THROWS_AS(ParamTuple(1, 1, 1, Q("0"), Q("1/2")), DomainError);
  CHECK_THROWS_AS(ParamTuple(1, 1, 1, Q("1/2"), Q("1")), DomainError);
}

TEST_CASE("constraint checks") {
  const ParamTuple unit(1, 1, 1, Q("1/100"), Q("1/100"));
  CHECK(check_theorem_constraints(unit, Variant::as_stated).admissible);
  CHECK(check_theorem_constraints(unit, Variant::as_proved).admissible);
  const auto r = check_theorem_constraints(unit);
  REQUIRE(r.constraints.size() == 5);
  CHECK(r.constraints[0].slack == Q("1/3200"));
  CHECK(r.constraints[2].slack == Q("9") - Q("86/100"));

  // all gammas at 2816/2825: delta1 = 288/2825 makes the mean constraint tight
  const mpq_class g = Q("2816/2825");
  const ParamTuple edge(g, g, g, Q("288/2825"), Q("1/10"));
  const auto e = check_theorem_constraints(edge);
  CHECK_FALSE(e.admissible);
  CHECK(e.constraints[0].slack == 0);
  CHECK(e.constraints[2].slack == 0);

  const ParamTuple boundary(1, 1, Q("1668/1714"), Q("1/1000"), Q("1/1000000"));
  CHECK_FALSE(check_theorem_constraints(boundary).admissible);
  const ParamTuple inside(1, 1, Q("1669/1714"), Q("1/1000"), Q("1/1000000"));
  CHECK(check_theorem_constraints(inside).admissible);
}

TEST_CASE("fourier-motzkin elimination") {
  // x + y > 1, x - y >= 0, 2 - x > 0  ->  eliminating y leaves x > 1/2 and x < 2
  std::vector<LinearConstraint> sys = {
      {{1, 1}, -1, true}, {{1, -1}, 0, false}, {{-1, 0}, 2, true}};
  const auto proj = eliminate(sys, 1);
  const auto b = univariate_bounds(proj, 0);
  CHECK(b.feasible);
  CHECK(b.lower == Q("1/2"));
  CHECK(b.lower_strict);
  CHECK(b.upper == 2);
  CHECK(b.upper_strict);
  // x > 1 and x < 1 is empty
  const auto empty = univariate_bounds({{{1}, -1, true}, {{-1}, 1, true}}, 0);
  CHECK_FALSE(empty.feasible);
  // x >= 1 and x <= 1 is the single point
  CHECK(univariate_bounds({{{1}, -1, false}, {{-1}, 1, false}}, 0).feasible);
}

TEST_CASE("thresholds") {
  const auto eq = solve_gamma_threshold(Scenario::equal_gammas);
  CHECK(eq.gamma_lower == Q("2816/2825"));
  CHECK(to_string(eq.gamma_lower) == "2816/2825");
  CHECK(eq.one_minus_bound == Q("9/2825"));
  const auto stated = solve_gamma_threshold(Scenario::equal_gammas, Variant::as_stated);
  CHECK(stated.gamma_lower == Q("1168/1171"));
  const auto unit = solve_gamma_threshold(Scenario::unit_linear_gammas);
  CHECK(unit.gamma_lower == Q("1668/1714"));
  CHECK(to_string(unit.gamma_lower) == "834/857");
  CHECK(solve_gamma_threshold(Scenario::unit_linear_gammas, Variant::as_stated).gamma_lower == Q("1668/1714"));
  const auto free3 = solve_gamma_threshold(Scenario::gamma3_free);
  CHECK(free3.one_minus_bound == Q("3335/193682"));
  CHECK(free3.gamma_lower == Q("190347/193682"));
  CHECK(solve_gamma_threshold(Scenario::gamma3_free, Variant::as_stated).one_minus_bound == Q("38341/2007094"));
}

TEST_CASE("thresholds separate admissible from inadmissible tuples") {
  const mpq_class eps = Q("1/10000000");
  const mpq_class g = Q("2816/2825");
  // just above the threshold some delta works, at it none does
  const mpq_class u = 1 - (g + eps);
  const mpq_class d1 = 32 * u + eps / 1000;
  CHECK(check_theorem_constraints(ParamTuple(g + eps, g + eps, g + eps, d1, 3 * u + eps / 1000)).admissible);
  for (const char* d : {"1/1000", "9/100", "288/2825", "1/10"}) {
    CHECK_FALSE(check_theorem_constraints(ParamTuple(g, g, g, Q(d), Q("1/10"))).admissible);
  }
  parse_scenario("gamma3-free");
  CHECK_THROWS_AS(parse_scenario("nope"), DomainError);
  CHECK_THROWS_AS(parse_variant("nope"), DomainError);
}

TEST_CASE("type I exponent table") {
  const auto t = type_I_exponents(1, 0);
  CHECK(t.a_i[0] == Q("3/2"));
  CHECK(t.a_i[2] == 1);
  CHECK(t.a_i[6] == Q("26/29"));
  CHECK(t.a_i[8] == Q("46/57"));
  CHECK(t.a == Q("46/57"));
  CHECK(t.b == 0);
  CHECK(t.c == 1);
  CHECK(t.feasible());

  const auto s = type_I_exponents(Q("2816/2825"), Q("27/2825"));
  const char* expect[9] = {"7107/5650",   "28716/31075", "481/565",     "43938/48025",  "32477/31075",
                           "60024/64975", "66277/81925", "61158/81925", "117197/161025"};
  for (int i = 0; i < 9; ++i) CHECK(s.a_i[i] == Q(expect[i]));
  CHECK(s.a == Q("117197/161025"));
  CHECK(s.b == Q("864/2825"));
  CHECK(s.c == Q("2762/2825"));
  CHECK(s.precondition);
  CHECK(s.b_below_two_thirds);
  CHECK(s.b_below_a);
  CHECK(s.window_nonempty);

  const auto bad = type_I_exponents(Q("2816/2825"), Q("288/2825"));
  CHECK_FALSE(bad.precondition);
  CHECK_FALSE(bad.feasible());
}
