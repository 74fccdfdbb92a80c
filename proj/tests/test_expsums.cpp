#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pshua/errors.hpp"
#include "pshua/expsums.hpp"
#include "pshua/psprimes.hpp"

using namespace pshua;

namespace {

const PrimeSieve& sieve() {
  static const PrimeSieve s(200000);
  return s;
}

PhaseAccurateAlpha q(std::int64_t a, std::uint64_t d, double lambda = 0.0) { return PhaseAccurateAlpha(a, d, lambda); }

}  // namespace

TEST_CASE("S1 examples") {
  CHECK(eval_S1(10, q(0, 1), sieve()).value() == cplx(4, 0));
  CHECK(eval_S1(10, q(1, 2), sieve()).value() == cplx(-2, 0));
  CHECK(eval_S1(100, q(1, 2), sieve()).value() == cplx(-23, 0));
  CHECK(eval_S1(1, q(1, 3), sieve()).value() == cplx(0, 0));
}

TEST_CASE("S3 examples") {
  CHECK(eval_S3(1000, q(0, 1), sieve()).value() == cplx(4, 0));
  CHECK(eval_S3(1000, q(1, 2), sieve()).value() == cplx(-2, 0));
  // the cube root of 7 is below 2, so the sum is empty
  CHECK(eval_S3(7, q(1, 3), sieve()).value() == cplx(0, 0));
  CHECK(eval_S3(8, q(1, 3), sieve()).value() == unit_root(2.0 / 3.0));
}

TEST_CASE("T sums") {
  const double expect = 1.5 * (std::cbrt(2.0) + std::cbrt(5.0) + std::cbrt(11.0));
  CHECK(eval_T1(30, q(0, 1), GammaParam(2, 3), sieve()).re() == doctest::Approx(expect).epsilon(1e-14));
  CHECK(eval_T3(27000, q(0, 1), GammaParam(2, 3), sieve()).re() == doctest::Approx(expect).epsilon(1e-14));
  CHECK(eval_T1(10, q(0, 1), GammaParam::one(), sieve()).value() == cplx(4, 0));
  CHECK(eval_T3(1000, q(0, 1), GammaParam::one(), sieve()).value() == cplx(4, 0));
  CHECK(eval_T1(1, q(1, 5), GammaParam(9, 10), sieve()).value() == cplx(0, 0));
}

TEST_CASE("sum specs") {
  CHECK(to_string(parse_sum_spec("T1:9/10")) == "T1:9/10");
  CHECK(parse_sum_spec("S3").kind == SumKind::S3);
  CHECK_THROWS_AS(parse_sum_spec("S2"), DomainError);
  CHECK_THROWS_AS(parse_sum_spec("T1:3/2"), DomainError);
}

TEST_CASE("capacity") {
  const PrimeSieve small(100);
  CHECK_THROWS_AS(eval_S1(101, q(0, 1), small), CapacityError);
  CHECK_NOTHROW(eval_S3(1000000, q(0, 1), small));
  CHECK_THROWS_AS(eval_S3(1030301, q(0, 1), small), CapacityError);
}

TEST_CASE("periodicity, conjugate symmetry and triangle bounds") {
  std::mt19937_64 rng(3);
  const GammaParam g(9, 10);
  const double t1_trivial = [&] {
    double s = 0;
    for (auto p : ps_primes_up_to(50000, g, sieve())) s += ps_weight(p, g);
    return s;
  }();
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t d = 1 + rng() % 60;
    const auto alpha = q(static_cast<std::int64_t>(rng() % d), d, (static_cast<double>(rng() % 1000) / 1000 - 0.5) / d);
    for (auto spec : {SumSpec{SumKind::S1, GammaParam::one()}, SumSpec{SumKind::S3, GammaParam::one()},
                      SumSpec{SumKind::T1, g}, SumSpec{SumKind::T3, g}}) {
      const auto base = eval_sum(spec, 50000, alpha, sieve());
      const auto shifted = eval_sum(spec, 50000, alpha.shifted(5), sieve());
      REQUIRE(base.value() == shifted.value());
      const auto neg = eval_sum(spec, 50000, alpha.negated(), sieve());
      REQUIRE(std::abs(neg.value() - std::conj(base.value())) <= base.error_budget() + neg.error_budget());
    }
    REQUIRE(std::abs(eval_S1(50000, alpha, sieve()).value()) <= 5133.0);
    REQUIRE(std::abs(eval_T1(50000, alpha, g, sieve()).value()) <= t1_trivial);
  }
}

TEST_CASE("gamma = 1 collapse is bitwise") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto alpha = PhaseAccurateAlpha::from_real(static_cast<double>(rng() >> 11) * 0x1p-53);
    const std::uint64_t N = 1 + rng() % 100000;
    REQUIRE(eval_T1(N, alpha, GammaParam::one(), sieve()).value() == eval_S1(N, alpha, sieve()).value());
    REQUIRE(eval_T3(N, alpha, GammaParam::one(), sieve()).value() == eval_S3(N, alpha, sieve()).value());
  }
}

TEST_CASE("trig polynomial evaluation agrees with direct sums") {
  const auto poly = TrigPolynomial::build({SumKind::S3, GammaParam::one()}, 100000, sieve());
  CHECK(poly.size() == 14);
  CHECK(poly.max_frequency() == 43ULL * 43 * 43);
  const auto alpha = q(2, 7, 1e-6);
  CHECK(std::abs(poly.evaluate(alpha).value() - eval_S3(100000, alpha, sieve()).value()) < 1e-12);
  CHECK(poly.l1_norm() == 14.0);
  CHECK(poly.l2_norm_squared() == 14.0);
}

TEST_CASE("psi") {
  CHECK(psi(0.25) == -0.25);
  CHECK(psi(0.0) == -0.5);
  CHECK(psi(-0.25) == 0.25);
  CHECK(nearest_int_distance(2.75) == 0.25);
}

TEST_CASE("psi truncation") {
  const auto half = psi_truncation_audit(0.5, 1);
  CHECK(half.lhs_error < 1e-15);
  CHECK(half.g == 1.0);
  CHECK(psi_truncation_audit(0.25, 10000).lhs_error < 1e-3);
  CHECK(psi_truncation_audit(0.0, 10).g == 1.0);
  CHECK(psi_truncation_audit(0.3, 100).g == doctest::Approx(1.0 / 30.0));
  CHECK_THROWS_AS(psi_truncation_audit(0.3, 0), DomainError);
}
