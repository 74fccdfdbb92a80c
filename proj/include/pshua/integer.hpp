#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pshua {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 gcd_u64(u64 a, u64 b);
u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(u64 n);

// Largest r with r^k <= x, by bisection on big integers.
mpz_class floor_root(const mpz_class& x, unsigned k);
// Smallest r with r^k >= x.
mpz_class ceil_root(const mpz_class& x, unsigned k);

// floor(n^(1/3)) exactly.
u64 icbrt(u64 n);

// Euler's totient and the Moebius function by trial division.
u64 euler_phi(u64 n);
int moebius(u64 n);

// Prime factorisation as (p, e) pairs in ascending p.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);
std::vector<u64> divisors(u64 n);

// Parses "a/b" (or "a") into a reduced rational. Throws DomainError.
mpq_class parse_fraction(const std::string& text);

std::string to_string(const mpq_class& q);

}  // namespace pshua
