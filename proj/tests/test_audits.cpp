#include <doctest.h>

#include <cmath>
#include <random>

#include "pshua/audits.hpp"
#include "pshua/errors.hpp"

using namespace pshua;

namespace {

const PrimeSieve& sieve() {
  static const PrimeSieve s(200000);
  return s;
}

std::uint64_t spacing_brute(std::uint64_t H, std::uint64_t N, double delta, double alpha) {
  std::uint64_t c = 0;
  for (std::uint64_t h1 = H + 1; h1 <= 2 * H; ++h1)
    for (std::uint64_t n1 = N + 1; n1 <= 2 * N; ++n1)
      for (std::uint64_t h2 = H + 1; h2 <= 2 * H; ++h2)
        for (std::uint64_t n2 = N + 1; n2 <= 2 * N; ++n2) {
          const double d = static_cast<double>(h1) * std::pow(static_cast<double>(n1), alpha) -
                           static_cast<double>(h2) * std::pow(static_cast<double>(n2), alpha);
          if (std::fabs(d) <= delta + 1e-9) ++c;
        }
  return c;
}

}  // namespace

TEST_CASE("alpha grid") {
  const auto g = make_alpha_grid(50, 1000, 1);
  CHECK(g.points.size() == 774 + 1000);
  CHECK(g.points.front().q() == 1);
  const auto h = make_alpha_grid(50, 1000, 1);
  for (std::size_t i = 0; i < g.points.size(); ++i) REQUIRE(g.points[i].approx() == h.points[i].approx());
}

TEST_CASE("vaughan ratios") {
  const auto half = vaughan_ratio(100, PhaseAccurateAlpha(1, 2), sieve());
  CHECK(half.abs_sum == 23.0);
  CHECK(half.q == 2);
  CHECK(half.shape == doctest::Approx(56068.916).epsilon(1e-6));
  CHECK(half.ratio == doctest::Approx(0.00041020946367845184).epsilon(1e-12));
  CHECK(vaughan_ratio(10, PhaseAccurateAlpha(0, 1), sieve()).ratio ==
        doctest::Approx(0.007307856260367615).epsilon(1e-12));
  const auto a = PhaseAccurateAlpha(3, 7, 1e-4);
  CHECK(vaughan_ratio(5000, a, sieve()).ratio == vaughan_ratio(5000, a.shifted(1), sieve()).ratio);
}

TEST_CASE("harman ratios") {
  const auto zero = harman_ratio(1000, PhaseAccurateAlpha(0, 1), sieve());
  CHECK(zero.abs_sum == 4.0);
  CHECK(zero.q == 1);
  const double shape = std::pow(1000.0, 1.0 / 3.0 + 0.01) * std::pow(1.0 + std::pow(1000.0, -1.0 / 6.0) + 1e-3, 1.0 / 16);
  CHECK(zero.ratio == doctest::Approx(4.0 / shape).epsilon(1e-12));
  const auto a = PhaseAccurateAlpha(2, 9);
  CHECK(harman_ratio(100000, a, sieve()).ratio == harman_ratio(100000, a.shifted(3), sieve()).ratio);
}

TEST_CASE("van der Corput branches") {
  const auto lin = audit_vdc(Monomial{1.0 / 3.0, 1.0, 0.0}, 3, 6);
  CHECK(lin.abs_sum < 1e-12);
  CHECK_FALSE(lin.second_derivative_ok);
  CHECK(lin.small_slope);
  CHECK(lin.shape_23 == doctest::Approx(3.0));
  CHECK_THROWS_AS(audit_vdc(Monomial{0.6, 1.0, 0.0}, 10, 20), DomainError);
  CHECK_THROWS_AS(audit_vdc(Monomial{1.0, 0.5, 0.0}, 10, 30), DomainError);
  // a steep monomial only supports the second-derivative branch
  const auto steep = audit_vdc(Monomial{2.0, 1.5, 0.0}, 100, 200);
  CHECK(steep.second_derivative_ok);
  CHECK_FALSE(steep.small_slope);
  CHECK(steep.ratio_22 > 0);
  CHECK(steep.ratio_23 == 0);
  const double t = 0.3 / (0.5 / std::sqrt(1000.0));
  const auto root = audit_vdc(Monomial{t, 0.5, 0.0}, 1000, 2000);
  CHECK(root.abs_sum == doctest::Approx(1.4253188021489143).epsilon(1e-9));
  CHECK(root.ratio_22 == doctest::Approx(0.06900986474730555).epsilon(1e-9));
}

TEST_CASE("k-th derivative test") {
  CHECK_THROWS_AS(audit_kth_derivative(Monomial{1.0, 0.5, 0.0}, 2, 10, 20), DomainError);
  CHECK_THROWS_AS(audit_kth_derivative(Monomial{1.0, 2.0, 0.0}, 3, 10, 20), DomainError);
  // nearly constant phase: the sum is the trivial N and stays below the shape
  const auto flat = audit_kth_derivative(Monomial{1e-12, 0.5, 0.0}, 3, 1000, 2000);
  CHECK(flat.abs_sum == doctest::Approx(1000.0).epsilon(1e-9));
  CHECK(flat.ratio <= 1.0);
  const auto m = audit_kth_derivative(Monomial{1e-3, 2.5, 0.0}, 3, 5000, 10000);
  CHECK(m.A == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(m.ratio > 0);
}

TEST_CASE("spacing counts") {
  CHECK(spacing_count(1, 1, 0.0, 0.7) == 1);
  CHECK(spacing_count(1, 2, 0.0, 0.75) == 2);
  CHECK(spacing_count(4, 8, 0.5, 0.6) == 58);
  CHECK(spacing_count(3, 5, 0.2, 0.8) == 21);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t H = 1 + rng() % 5, N = 1 + rng() % 12;
    const double delta = static_cast<double>(rng() % 100) / 50.0;
    const double alpha = 0.55 + static_cast<double>(rng() % 40) / 100.0;
    REQUIRE(spacing_count(H, N, delta, alpha) == spacing_brute(H, N, delta, alpha));
  }
  CHECK_THROWS_AS(spacing_count(0, 3, 0.1, 0.7), DomainError);
}

TEST_CASE("Heath-Brown identity") {
  const auto e = heath_brown_identity_check(8, 2, 3);
  CHECK(e.holds);
  CHECK(e.von_mangoldt == doctest::Approx(std::log(2.0)));
  CHECK(heath_brown_identity_check(6, 2, 3).holds);
  CHECK(heath_brown_identity_check(6, 2, 3).von_mangoldt == 0.0);
  CHECK(heath_brown_identity_check(1, 1, 1).identity_value == 0.0);
  CHECK_THROWS_AS(heath_brown_identity_check(17, 2, 3), DomainError);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    REQUIRE(heath_brown_identity_check(n, std::ceil(std::cbrt(n / 2.0)), 3).holds);
  }
}

TEST_CASE("Graham-Kolesnik optimisation") {
  const auto r = graham_kolesnik_optimize({{1, 1}}, {{1, 1}}, 1, 10);
  CHECK(r.H == 1.0);
  CHECK(r.value == 2.0);
  CHECK(r.lemma_bound == doctest::Approx(2.1));
  CHECK(r.within);
  CHECK(graham_kolesnik_optimize({{2, 0.5}}, {}, 3, 9).H == 3.0);
  CHECK(graham_kolesnik_optimize({}, {{2, 0.5}}, 3, 9).H == 9.0);
  CHECK_THROWS_AS(graham_kolesnik_optimize({{-1, 1}}, {}, 1, 2), DomainError);
  CHECK_THROWS_AS(graham_kolesnik_optimize({{1, 0}}, {}, 1, 2), DomainError);
  CHECK_THROWS_AS(graham_kolesnik_optimize({{1, 1}}, {}, 3, 2), DomainError);
  std::mt19937_64 rng(31);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1p-53; };
  for (int i = 0; i < 1000; ++i) {
    std::vector<PowerTerm> A, B;
    for (std::uint64_t j = 0, m = 1 + rng() % 3; j < m; ++j) A.push_back({std::exp(8 * unit() - 4), 0.1 + 3 * unit()});
    for (std::uint64_t j = 0, n = 1 + rng() % 3; j < n; ++j) B.push_back({std::exp(8 * unit() - 4), 0.1 + 3 * unit()});
    const double H1 = std::exp(4 * unit());
    const auto g = graham_kolesnik_optimize(A, B, H1, H1 * std::exp(6 * unit()));
    REQUIRE(g.within);
  }
}

TEST_CASE("min-sum bound") {
  const auto half = audit_min_sum(Monomial{1.0, 1.0, 0.5}, 10.0, 100);
  CHECK(half.sum == doctest::Approx(200.0));
  CHECK(half.Delta == 1.0);
  CHECK(audit_min_sum(Monomial{1.0, 1.0, 0.5}, 1.5, 100).sum == doctest::Approx(150.0));
  CHECK_THROWS_AS(audit_min_sum(Monomial{0.0, 1.0, 0.0}, 10.0, 100), DomainError);
  const auto r = audit_min_sum(Monomial{0.01, 1.5, 0.0}, 50.0, 1000);
  CHECK(r.ratio > 0);
  CHECK(r.ratio < 1);
}

TEST_CASE("T1 gap") {
  const auto grid = make_alpha_grid(10, 50, 3);
  const auto one = audit_t1_gap(20000, GammaParam::one(), mpq_class(1, 100), grid, sieve());
  CHECK(one.applicable);
  CHECK(one.max_gap_ratio == 0.0);
  const auto r = audit_t1_gap(20000, GammaParam(9, 10), mpq_class(1, 100), grid, sieve());
  CHECK(r.applicable);
  CHECK(r.samples > 2 * 20000);
  CHECK(r.mean_square == doctest::Approx(r.weight_square_sum).epsilon(1e-10));
  CHECK_FALSE(audit_t1_gap(20000, GammaParam(1, 2), mpq_class(1, 100), grid, sieve()).applicable);
}

TEST_CASE("calibrated audits pass and are reproducible") {
  AuditSettings s;
  s.steps = 2;
  for (const auto& name : {"vdc", "spacing", "psi", "graham-kolesnik"}) {
    const auto a = run_calibrated_audit(name, s, sieve());
    const auto b = run_calibrated_audit(name, s, sieve());
    CHECK(a.pass);
    REQUIRE(a.rows.size() == 3);
    for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].max_ratio == b.rows[i].max_ratio);
  }
  CHECK_THROWS_AS(run_calibrated_audit("nope", s, sieve()), DomainError);
}
