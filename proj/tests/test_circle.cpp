#include <doctest.h>

#include <cmath>
#include <random>

#include "pshua/circle.hpp"
#include "pshua/counting.hpp"
#include "pshua/errors.hpp"
#include "pshua/integer.hpp"

using namespace pshua;

namespace {

const PrimeSieve& sieve() {
  static const PrimeSieve s(20000);
  return s;
}

std::vector<SumSpec> hua_factors() {
  return {{SumKind::S1, GammaParam::one()}, {SumKind::S1, GammaParam::one()}, {SumKind::S3, GammaParam::one()}};
}

}  // namespace

TEST_CASE("dirichlet approximation examples") {
  const auto a = dirichlet_approx(0.3, 10);
  CHECK(a.a == 3);
  CHECK(a.q == 10);
  CHECK(std::fabs(a.lambda) < 1e-16);
  const auto b = dirichlet_approx(1.0 / 3.0, 2);
  CHECK(b.a == 0);
  CHECK(b.q == 1);
  CHECK(b.lambda == doctest::Approx(1.0 / 3.0));
  const auto c = dirichlet_approx(0.0, 1);
  CHECK(c.a == 0);
  CHECK(c.q == 1);
  CHECK(c.lambda == 0.0);
  CHECK_THROWS_AS(dirichlet_approx(0.5, 0.5), DomainError);
}

TEST_CASE("dirichlet approximation satisfies the lemma conditions") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10000; ++i) {
    const double alpha = (static_cast<double>(rng() >> 11) * 0x1p-53 - 0.5) * 20.0;
    const double tau = 1.0 + std::exp(static_cast<double>(rng() % 2000) / 100.0);
    const auto r = dirichlet_approx(alpha, tau);
    REQUIRE(r.q >= 1);
    REQUIRE(static_cast<double>(r.q) <= tau);
    REQUIRE(gcd_u64(static_cast<std::uint64_t>(std::llabs(r.a)), r.q) == 1);
    const mpq_class exact = mpq_class(alpha) - mpq_class(r.a, r.q);
    REQUIRE(std::fabs(r.lambda - exact.get_d()) <= 1e-16 * std::fabs(exact.get_d()) + 1e-300);
    REQUIRE(abs(exact) <= mpq_class(1) / (mpq_class(r.q) * mpq_class(tau)));
  }
}

TEST_CASE("arc dissection") {
  ArcDissection d(1000, 2, 100.0);
  CHECK(major_measure(d) == doctest::Approx(0.03).epsilon(1e-12));
  CHECK(major_measure(ArcDissection(1000, 1, 100.0)) == doctest::Approx(0.02).epsilon(1e-12));
  const auto m = classify(0.5, d);
  CHECK(m.major);
  CHECK(m.a == 1);
  CHECK(m.q == 2);
  const auto edge = classify(0.5 + 1.0 / 200.0, d);
  CHECK(edge.major);
  CHECK(edge.q == 2);
  CHECK_FALSE(classify(0.25, d).major);
  CHECK_FALSE(classify(0.75, d).major);
  CHECK(classify(1.0, d).major);
  CHECK_THROWS_AS(classify(0.001, d), DomainError);
  CHECK_THROWS_AS(classify(1.5, d), DomainError);
  for (std::uint64_t Q : {1ULL, 3ULL, 10ULL, 40ULL}) {
    ArcDissection e(100000, Q, 5000.0);
    CHECK(major_measure(e) <= 2.0 * static_cast<double>(Q) / 5000.0 + 1e-15);
    double minor = 0;
    for (const auto& iv : e.minor_intervals()) minor += iv.length();
    CHECK(minor + major_measure(e) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("sigma parametrisation") {
  const auto d = ArcDissection::from_sigma(1000000, mpq_class(1, 6));
  CHECK(d.Q() == 10);
  CHECK(d.tau() == doctest::Approx(100000.0).epsilon(1e-12));
  CHECK_THROWS_AS(ArcDissection::from_sigma(1000, mpq_class(1, 5)), DomainError);
  CHECK_THROWS_AS(ArcDissection::from_sigma(1000, mpq_class(0)), DomainError);
}

TEST_CASE("full interval integrals count representations") {
  const auto f = hua_factors();
  CHECK(std::llround(circle_integral(12, f, sieve(), IntegralDomain::full).value.real()) == 1);
  CHECK(std::llround(circle_integral(13, f, sieve(), IntegralDomain::full).value.real()) == 2);
  const std::vector<SumSpec> s1 = {{SumKind::S1, GammaParam::one()}};
  CHECK(std::fabs(circle_integral(5, s1, sieve(), IntegralDomain::full).value.real() - 1.0) < 1e-12);
  CHECK(std::fabs(circle_integral(9, s1, sieve(), IntegralDomain::full).value.real()) < 1e-12);
}

TEST_CASE("full integral refuses too few samples and is independent of M above the bandwidth") {
  const auto f = hua_factors();
  const auto base = circle_integral(501, f, sieve(), IntegralDomain::full);
  IntegralOptions few;
  few.samples = base.bandwidth;
  CHECK_THROWS_AS(circle_integral(501, f, sieve(), IntegralDomain::full, nullptr, few), DomainError);
  for (std::size_t extra : {1u, 7u, 1000u}) {
    IntegralOptions o;
    o.samples = base.bandwidth + extra;
    const auto r = circle_integral(501, f, sieve(), IntegralDomain::full, nullptr, o);
    CHECK(std::abs(r.value - base.value) < 1e-6);
  }
}

TEST_CASE("orthogonality against direct counts for small N") {
  for (std::uint64_t N = 10; N <= 400; ++N) {
    RepQuery q;
    q.N = N;
    const auto r = circle_integral(N, hua_factors(), sieve(), IntegralDomain::full);
    REQUIRE(std::fabs(r.value.real() - static_cast<double>(count_hua(q, sieve()).count)) < 1e-6);
    REQUIRE(std::fabs(r.value.imag()) < 1e-6);
  }
}

TEST_CASE("major plus minor equals the full integral") {
  const std::uint64_t N = 301;
  const auto d = ArcDissection::from_sigma(N, mpq_class(1, 6));
  const auto f = hua_factors();
  const auto full = circle_integral(N, f, sieve(), IntegralDomain::full);
  const auto major = circle_integral(N, f, sieve(), IntegralDomain::major, &d);
  const auto minor = circle_integral(N, f, sieve(), IntegralDomain::minor, &d);
  CHECK_FALSE(major.cap_reached);
  CHECK_FALSE(minor.cap_reached);
  const double budget = full.error_estimate + major.error_estimate + minor.error_estimate;
  CHECK(std::abs(major.value + minor.value - full.value) <= budget);
  CHECK(budget < 1e-3);
}
