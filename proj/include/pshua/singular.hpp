#pragma once

#include <cstdint>

#include "pshua/phase.hpp"

namespace pshua {

// C_q(a,k) = sum_{l=1..q, (l,q)=1} e(a l^k / q); residues a l^k mod q are exact.
// Throws DomainError when gcd(a,q) != 1.
cplx c_q(std::int64_t a, unsigned k, std::uint64_t q);

// B_q(N,k) = sum_{a=1..q, (a,q)=1} C_q(a,k) e(-aN/q), evaluated as the direct
// double sum. b_q_complex keeps the imaginary part; b_q checks it is below
// 1e-10 (NumericalError otherwise) and drops it.
cplx b_q_complex(std::uint64_t N, unsigned k, std::uint64_t q);
double b_q(std::uint64_t N, unsigned k, std::uint64_t q);

// Ramanujan sum c_q(m) = sum_{d | (q,m)} mu(q/d) d.
std::int64_t ramanujan_sum(std::uint64_t q, std::int64_t m);

// B_q(N,k) in exact integers: swapping the two sums turns the inner sum over
// a into a Ramanujan sum, B_q = sum_{(l,q)=1} c_q(l^k - N). O(q) per call.
std::int64_t b_q_exact(std::uint64_t N, unsigned k, std::uint64_t q);

struct EulerProductEstimate {
  std::uint64_t N = 0;
  unsigned k = 1;
  std::uint64_t cutoff = 0;
  double value = 0.0;
  double last_factor_delta = 0.0;  // |value(cutoff) - value(previous prime)|
  std::uint64_t last_prime = 0;
  bool vanishes = false;           // some local factor <= 0
  std::uint64_t vanishing_prime = 0;
};

// prod_{p <= cutoff} (1 + B_p(N,k)/(p-1)^3). A local factor <= 0 is reported
// through `vanishes` and the value is set to 0.
EulerProductEstimate singular_series_hua(std::uint64_t N, unsigned k, std::uint64_t cutoff);

// prod_{p|N}(1 - 1/(p-1)^2) prod_{p not | N}(1 + 1/(p-1)^3) over p <= cutoff.
// Even N makes the p = 2 factor vanish: DomainError.
double singular_series_vinogradov(std::uint64_t N, std::uint64_t cutoff);

}  // namespace pshua
