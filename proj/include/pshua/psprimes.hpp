#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "pshua/gamma.hpp"
#include "pshua/sieve.hpp"

namespace pshua {

// Piatetski-Shapiro primes: p is in P_gamma iff p = floor(n^(1/gamma)) for
// some n, i.e. iff some integer n satisfies p^gamma <= n < (p+1)^gamma.
// With gamma = a/b this is decided in integers: take the least n with
// n^b >= p^a and test n^b < (p+1)^a.

// Membership with primality checked by Miller-Rabin.
bool is_ps_member(std::uint64_t p, const GammaParam& gamma);
// Membership with primality read from the sieve.
bool is_ps_member(std::uint64_t p, const GammaParam& gamma, const PrimeSieve& sieve);

// The indicator [-p^gamma] - [-(p+1)^gamma] for any p >= 1 (prime or not).
int ps_indicator(std::uint64_t p, const GammaParam& gamma);

// Reusable membership tester; keeps its big-integer scratch space.
class PsMembership {
 public:
  explicit PsMembership(const GammaParam& gamma);
  bool contains(std::uint64_t p);

 private:
  GammaParam gamma_;
  mpz_class lhs_, rhs_, n_, power_;
};

// Generates floor(n^(1/gamma)) for n = 1, 2, ... exactly, advancing the root
// incrementally instead of powering in floating point.
class PsFloorSequence {
 public:
  explicit PsFloorSequence(const GammaParam& gamma);
  // floor(n^(1/gamma)) for the next n.
  std::uint64_t next();
  std::uint64_t index() const { return n_; }

 private:
  GammaParam gamma_;
  std::uint64_t n_ = 0;
  std::uint64_t root_ = 0;
  mpz_class target_, probe_;
};

// Ascending list of p <= x in P_gamma, generated from the floor sequence.
std::vector<std::uint64_t> ps_primes_up_to(std::uint64_t x, const GammaParam& gamma,
                                           const PrimeSieve& sieve);

struct PsCount {
  std::uint64_t count = 0;
  double density_ratio = 0.0;  // count / (x^gamma / log x)
};

PsCount ps_count(std::uint64_t x, const GammaParam& gamma, const PrimeSieve& sieve);

// The weight p^(1-gamma)/gamma carried by T_1 and T_3.
struct PSWeight {
  std::uint64_t prime;
  GammaParam gamma;
  double weight;
};

double ps_weight(std::uint64_t p, const GammaParam& gamma);

}  // namespace pshua
