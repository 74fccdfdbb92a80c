#include "pshua/singular.hpp"

#include <cmath>
#include <string>

#include "pshua/errors.hpp"
#include "pshua/integer.hpp"
#include "pshua/sieve.hpp"

namespace pshua {
namespace {

std::uint64_t mod_signed(std::int64_t a, std::uint64_t q) {
  const auto qs = static_cast<std::int64_t>(q);
  std::int64_t r = a % qs;
  return static_cast<std::uint64_t>(r < 0 ? r + qs : r);
}

void check_cutoff(std::uint64_t cutoff) {
  if (cutoff < 2) throw DomainError("singular series cutoff must be at least 2");
}

}  // namespace

cplx c_q(std::int64_t a, unsigned k, std::uint64_t q) {
  if (q == 0) throw DomainError("c_q: q must be positive");
  const std::uint64_t ar = mod_signed(a, q);
  if (gcd_u64(ar, q) != 1) throw DomainError("c_q: gcd(a,q) must be 1");
  ComplexAccumulator acc;
  for (std::uint64_t l = 1; l <= q; ++l) {
    if (gcd_u64(l, q) != 1) continue;
    const std::uint64_t r = mul_mod(ar, pow_mod(l, k, q), q);
    acc.add(unit_root(static_cast<double>(r) / static_cast<double>(q)));
  }
  return acc.value();
}

cplx b_q_complex(std::uint64_t N, unsigned k, std::uint64_t q) {
  if (q == 0) throw DomainError("b_q: q must be positive");
  // residue table l^k mod q for the units
  std::vector<std::uint64_t> powers;
  for (std::uint64_t l = 1; l <= q; ++l) {
    if (gcd_u64(l, q) == 1) powers.push_back(pow_mod(l, k, q));
  }
  const std::uint64_t n_mod = N % q;
  const double qd = static_cast<double>(q);
  ComplexAccumulator outer;
  for (std::uint64_t a = 1; a <= q; ++a) {
    if (gcd_u64(a, q) != 1) continue;
    ComplexAccumulator inner;
    for (std::uint64_t r : powers) inner.add(unit_root(static_cast<double>(mul_mod(a, r, q)) / qd));
    const std::uint64_t shift = (q - mul_mod(a, n_mod, q)) % q;
    outer.add(inner.value() * unit_root(static_cast<double>(shift) / qd));
  }
  return outer.value();
}

double b_q(std::uint64_t N, unsigned k, std::uint64_t q) {
  const cplx v = b_q_complex(N, k, q);
  if (std::fabs(v.imag()) >= 1e-10) {
    throw NumericalError("B_q(" + std::to_string(N) + "," + std::to_string(k) + "," +
                         std::to_string(q) + ") has imaginary part " + std::to_string(v.imag()));
  }
  return v.real();
}

std::int64_t ramanujan_sum(std::uint64_t q, std::int64_t m) {
  if (q == 0) throw DomainError("ramanujan_sum: q must be positive");
  const std::uint64_t g = gcd_u64(q, mod_signed(m, q) == 0 ? q : mod_signed(m, q));
  std::int64_t sum = 0;
  for (std::uint64_t d : divisors(g)) sum += moebius(q / d) * static_cast<std::int64_t>(d);
  return sum;
}

std::int64_t b_q_exact(std::uint64_t N, unsigned k, std::uint64_t q) {
  if (q == 0) throw DomainError("b_q_exact: q must be positive");
  // c_q(m) only depends on gcd(m, q); tabulate it per divisor of q.
  std::vector<std::int64_t> by_gcd(q + 1, 0);
  for (std::uint64_t d : divisors(q)) by_gcd[d] = ramanujan_sum(q, static_cast<std::int64_t>(d % q));
  const std::uint64_t n_mod = N % q;
  std::int64_t total = 0;
  for (std::uint64_t l = 1; l <= q; ++l) {
    if (gcd_u64(l, q) != 1) continue;
    const std::uint64_t m = (pow_mod(l, k, q) + q - n_mod) % q;
    total += by_gcd[gcd_u64(m, q)];
  }
  return total;
}

EulerProductEstimate singular_series_hua(std::uint64_t N, unsigned k, std::uint64_t cutoff) {
  check_cutoff(cutoff);
  if (k == 0) throw DomainError("singular_series_hua: k must be positive");
  EulerProductEstimate est;
  est.N = N;
  est.k = k;
  est.cutoff = cutoff;
  const PrimeSieve sieve(cutoff);
  double value = 1.0;
  double previous = 1.0;
  for (std::uint64_t p : sieve.primes()) {
    const double pm1 = static_cast<double>(p - 1);
    const double factor = 1.0 + static_cast<double>(b_q_exact(N, k, p)) / (pm1 * pm1 * pm1);
    if (factor <= 0.0) {
      est.vanishes = true;
      est.vanishing_prime = p;
      est.value = 0.0;
      est.last_prime = p;
      est.last_factor_delta = std::fabs(value);
      return est;
    }
    previous = value;
    value *= factor;
    est.last_prime = p;
  }
  est.value = value;
  est.last_factor_delta = std::fabs(value - previous);
  return est;
}

double singular_series_vinogradov(std::uint64_t N, std::uint64_t cutoff) {
  check_cutoff(cutoff);
  if (N % 2 == 0) {
    throw DomainError("singular series vanishes for even N (factor at p=2 is 1-1/(2-1)^2 = 0)");
  }
  const PrimeSieve sieve(cutoff);
  double value = 1.0;
  for (std::uint64_t p : sieve.primes()) {
    const double pm1 = static_cast<double>(p - 1);
    value *= (N % p == 0) ? 1.0 - 1.0 / (pm1 * pm1) : 1.0 + 1.0 / (pm1 * pm1 * pm1);
  }
  return value;
}

}  // namespace pshua
