#include "pshua/psprimes.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pshua/errors.hpp"
#include "pshua/integer.hpp"

namespace pshua {

GammaParam::GammaParam(std::uint32_t numerator, std::uint32_t denominator) {
  if (numerator == 0 || denominator == 0 || numerator > denominator) {
    throw DomainError("gamma must lie in (0,1], got " + std::to_string(numerator) + "/" +
                      std::to_string(denominator));
  }
  const std::uint32_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

GammaParam GammaParam::parse(std::string_view text) {
  const mpq_class q = parse_fraction(std::string(text));
  if (q <= 0 || q > 1) throw DomainError("gamma must lie in (0,1], got " + std::string(text));
  if (!q.get_den().fits_uint_p()) throw DomainError("gamma denominator too large: " + std::string(text));
  return GammaParam(static_cast<std::uint32_t>(q.get_num().get_ui()),
                    static_cast<std::uint32_t>(q.get_den().get_ui()));
}

std::string GammaParam::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

PsMembership::PsMembership(const GammaParam& gamma) : gamma_(gamma) {}

bool PsMembership::contains(std::uint64_t p) {
  if (gamma_.is_one()) return true;
  const unsigned a = gamma_.numerator();
  const unsigned b = gamma_.denominator();
  // least n with n^b >= p^a, by bisection
  mpz_ui_pow_ui(lhs_.get_mpz_t(), p, a);
  n_ = ceil_root(lhs_, b);
  mpz_pow_ui(power_.get_mpz_t(), n_.get_mpz_t(), b);
  mpz_ui_pow_ui(rhs_.get_mpz_t(), p + 1, a);
  return power_ < rhs_;
}

int ps_indicator(std::uint64_t p, const GammaParam& gamma) {
  if (p == 0) throw DomainError("ps_indicator: p must be positive");
  // [-p^g] - [-(p+1)^g] = ceil((p+1)^g) - ceil(p^g), the number of integers in
  // [p^g, (p+1)^g).
  const unsigned a = gamma.numerator();
  const unsigned b = gamma.denominator();
  mpz_class lo, hi;
  mpz_ui_pow_ui(lo.get_mpz_t(), p, a);
  mpz_ui_pow_ui(hi.get_mpz_t(), p + 1, a);
  const mpz_class diff = ceil_root(hi, b) - ceil_root(lo, b);
  return static_cast<int>(diff.get_si());
}

bool is_ps_member(std::uint64_t p, const GammaParam& gamma) {
  if (!is_prime_u64(p)) throw DomainError("is_ps_member: " + std::to_string(p) + " is not prime");
  return PsMembership(gamma).contains(p);
}

bool is_ps_member(std::uint64_t p, const GammaParam& gamma, const PrimeSieve& sieve) {
  if (!sieve.is_prime(p)) throw DomainError("is_ps_member: " + std::to_string(p) + " is not prime");
  return PsMembership(gamma).contains(p);
}

PsFloorSequence::PsFloorSequence(const GammaParam& gamma) : gamma_(gamma) {}

std::uint64_t PsFloorSequence::next() {
  ++n_;
  if (gamma_.is_one()) return root_ = n_;
  const unsigned a = gamma_.numerator();
  const unsigned b = gamma_.denominator();
  // root = floor((n^b)^(1/a)); it never decreases, so step it up from the
  // previous value while (root+1)^a <= n^b.
  mpz_ui_pow_ui(target_.get_mpz_t(), n_, b);
  for (;;) {
    mpz_ui_pow_ui(probe_.get_mpz_t(), root_ + 1, a);
    if (probe_ > target_) break;
    ++root_;
  }
  return root_;
}

std::vector<std::uint64_t> ps_primes_up_to(std::uint64_t x, const GammaParam& gamma,
                                           const PrimeSieve& sieve) {
  if (x > sieve.limit()) {
    throw CapacityError("ps_primes_up_to: x=" + std::to_string(x) + " beyond sieve limit " +
                        std::to_string(sieve.limit()));
  }
  if (gamma.is_one()) {
    const auto view = sieve.primes_up_to(x);
    return {view.begin(), view.end()};
  }
  std::vector<std::uint64_t> out;
  PsFloorSequence seq(gamma);
  for (;;) {
    const std::uint64_t m = seq.next();
    if (m > x) break;
    // 1/gamma > 1 makes the sequence strictly increasing, so no duplicates.
    if (sieve.is_prime(m)) out.push_back(m);
  }
  return out;
}

PsCount ps_count(std::uint64_t x, const GammaParam& gamma, const PrimeSieve& sieve) {
  if (x < 3) throw DomainError("ps_count: x must be at least 3");
  PsCount c;
  c.count = ps_primes_up_to(x, gamma, sieve).size();
  const double xd = static_cast<double>(x);
  c.density_ratio = static_cast<double>(c.count) / (std::pow(xd, gamma.value()) / std::log(xd));
  return c;
}

double ps_weight(std::uint64_t p, const GammaParam& gamma) {
  if (gamma.is_one()) return 1.0;
  const double num = gamma.numerator();
  const double den = gamma.denominator();
  return std::pow(static_cast<double>(p), (den - num) / den) * den / num;
}

}  // namespace pshua
