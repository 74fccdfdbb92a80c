#include <doctest.h>

#include "pshua/errors.hpp"
#include "pshua/integer.hpp"

using namespace pshua;

static bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST_CASE("miller-rabin agrees with trial division below 10^5") {
  for (u64 n = 0; n < 100000; ++n) REQUIRE(is_prime_u64(n) == trial_prime(n));
}

TEST_CASE("miller-rabin on large inputs") {
  CHECK(is_prime_u64(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime_u64(3215031751ULL));      // strong pseudoprime to bases 2,3,5,7
  CHECK_FALSE(is_prime_u64(18446744073709551615ULL));
  CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
}

TEST_CASE("integer roots are exact at perfect powers") {
  const mpz_class p = mpz_class(1000003) * 1000003 * 1000003;
  CHECK(floor_root(p, 3) == 1000003);
  CHECK(ceil_root(p, 3) == 1000003);
  CHECK(floor_root(p - 1, 3) == 1000002);
  CHECK(ceil_root(p + 1, 3) == 1000004);
  CHECK(floor_root(mpz_class(0), 5) == 0);
  CHECK(ceil_root(mpz_class(1), 7) == 1);
}

TEST_CASE("icbrt") {
  for (u64 c : {0ULL, 1ULL, 2ULL, 7ULL, 8ULL, 26ULL, 27ULL, 999999ULL, 1000000ULL}) {
    const u64 r = icbrt(c);
    CHECK(r * r * r <= c);
    CHECK((r + 1) * (r + 1) * (r + 1) > c);
  }
  CHECK(icbrt(18446744073709551615ULL) == 2642245);
  CHECK(icbrt(2642245ULL * 2642245ULL * 2642245ULL) == 2642245);
  CHECK(icbrt(2642245ULL * 2642245ULL * 2642245ULL - 1) == 2642244);
}

TEST_CASE("arithmetic functions") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(36) == 12);
  CHECK(euler_phi(97) == 96);
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK(moebius(12) == 0);
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(gcd_u64(0, 5) == 5);
  CHECK(pow_mod(3, 200, 1000000007ULL) == 136318165ULL);
  CHECK(mul_mod(18446744073709551557ULL - 1, 2, 18446744073709551557ULL) == 18446744073709551557ULL - 2);
}

TEST_CASE("fractions parse to canonical form") {
  CHECK(parse_fraction("4/6") == mpq_class(2, 3));
  CHECK(to_string(parse_fraction("4/6")) == "2/3");
  CHECK(to_string(parse_fraction("-3")) == "-3");
  CHECK(to_string(parse_fraction("1668/1714")) == "834/857");
  CHECK_THROWS_AS(parse_fraction("1/0"), DomainError);
  CHECK_THROWS_AS(parse_fraction("abc"), DomainError);
  CHECK_THROWS_AS(parse_fraction(""), DomainError);
}
