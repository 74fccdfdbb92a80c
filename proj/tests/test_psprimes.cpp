#include <doctest.h>

#include <cmath>

#include "pshua/errors.hpp"
#include "pshua/integer.hpp"
#include "pshua/psprimes.hpp"

using namespace pshua;

namespace {

// exact scan: some n with floor(n^(b/a)) = p, i.e. p^a <= n^b < (p+1)^a
bool scan_member(std::uint64_t p, unsigned a, unsigned b) {
  mpz_class lo, hi;
  mpz_ui_pow_ui(lo.get_mpz_t(), p, a);
  mpz_ui_pow_ui(hi.get_mpz_t(), p + 1, a);
  const double start = std::floor(std::pow(static_cast<double>(p), static_cast<double>(a) / b)) - 1;
  const double stop = std::ceil(std::pow(static_cast<double>(p + 1), static_cast<double>(a) / b)) + 1;
  for (double n = std::max(1.0, start); n <= stop; n += 1) {
    mpz_class nb;
    mpz_ui_pow_ui(nb.get_mpz_t(), static_cast<unsigned long>(n), b);
    if (lo <= nb && nb < hi) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("gamma parameters") {
  CHECK(GammaParam::parse("4/6").str() == "2/3");
  CHECK(GammaParam::parse("1").is_one());
  CHECK(GammaParam::parse("7/7").is_one());
  CHECK_THROWS_AS(GammaParam::parse("3/2"), DomainError);
  CHECK_THROWS_AS(GammaParam::parse("0/5"), DomainError);
  CHECK_THROWS_AS(GammaParam::parse("x"), DomainError);
}

TEST_CASE("membership examples") {
  CHECK(is_ps_member(2, GammaParam::one()));
  CHECK_FALSE(is_ps_member(3, GammaParam(2, 3)));
  CHECK(is_ps_member(5, GammaParam(2, 3)));
  CHECK(is_ps_member(11, GammaParam(2, 3)));
  CHECK_THROWS_AS(is_ps_member(9, GammaParam(2, 3)), DomainError);
}

TEST_CASE("prime lists") {
  const PrimeSieve s(1000);
  CHECK(ps_primes_up_to(30, GammaParam(2, 3), s) == std::vector<std::uint64_t>{2, 5, 11});
  CHECK(ps_primes_up_to(30, GammaParam::one(), s).size() == 10);
  CHECK(ps_primes_up_to(1, GammaParam(2, 3), s).empty());
  CHECK(ps_primes_up_to(1, GammaParam::one(), s).empty());
  CHECK_THROWS_AS(ps_primes_up_to(1001, GammaParam(2, 3), s), CapacityError);
}

TEST_CASE("gamma = 1 list equals the prime list up to 10^5") {
  const PrimeSieve s(100000);
  for (std::uint64_t x : {2ULL, 3ULL, 100ULL, 9973ULL, 65536ULL, 100000ULL}) {
    const auto v = ps_primes_up_to(x, GammaParam::one(), s);
    const auto w = s.primes_up_to(x);
    CHECK(std::equal(v.begin(), v.end(), w.begin(), w.end()));
  }
}

TEST_CASE("floor sequence lists floor(n^(1/gamma)) in order") {
  PsFloorSequence seq(GammaParam(1, 2));
  for (std::uint64_t n = 1; n <= 1000; ++n) REQUIRE(seq.next() == n * n);
  PsFloorSequence seq2(GammaParam(2, 3));
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const mpz_class f = floor_root(mpz_class(n) * n * n, 2);
    REQUIRE(seq2.next() == f.get_ui());
  }
}

TEST_CASE("list, indicator and exact scan agree for b <= 10 below 2*10^4") {
  const PrimeSieve s(20000);
  for (unsigned b = 1; b <= 10; ++b) {
    for (unsigned a = 1; a <= b; ++a) {
      if (gcd_u64(a, b) != 1) continue;
      const GammaParam g(a, b);
      const auto list = ps_primes_up_to(20000, g, s);
      std::size_t pos = 0;
      for (auto p : s.primes()) {
        const bool in_list = pos < list.size() && list[pos] == p;
        if (in_list) ++pos;
        const int ind = ps_indicator(p, g);
        REQUIRE(ind >= 0);
        if (!g.is_one()) REQUIRE(ind <= 1);
        REQUIRE((ind > 0) == in_list);
        REQUIRE(scan_member(p, a, b) == in_list);
      }
      REQUIRE(pos == list.size());
      REQUIRE(list.size() <= s.primes().size());
    }
  }
}

TEST_CASE("counts and density ratios") {
  const PrimeSieve s(100000);
  const PsCount c30 = ps_count(30, GammaParam::one(), s);
  CHECK(c30.count == 10);
  CHECK(c30.density_ratio == doctest::Approx(10.0 * std::log(30.0) / 30.0).epsilon(1e-15));
  const PsCount c = ps_count(30, GammaParam(2, 3), s);
  CHECK(c.count == 3);
  CHECK(c.density_ratio == doctest::Approx(3.0 * std::log(30.0) / std::pow(30.0, 2.0 / 3.0)).epsilon(1e-14));
  const PsCount big = ps_count(100000, GammaParam(9, 10), s);
  CHECK(big.count == 3080);
  CHECK(big.density_ratio == doctest::Approx(1.121337663632617).epsilon(1e-12));
  CHECK_THROWS_AS(ps_count(2, GammaParam(9, 10), s), DomainError);
}

TEST_CASE("weights") {
  CHECK(ps_weight(97, GammaParam::one()) == 1.0);
  CHECK(ps_weight(8, GammaParam(2, 3)) == doctest::Approx(3.0).epsilon(1e-15));
}
