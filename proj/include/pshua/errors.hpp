#pragma once

#include <stdexcept>
#include <string>

namespace pshua {

// Input outside an operation's mathematical domain (non-prime p, gamma out of
// range, even N for a vanishing singular series, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds a precomputed table, usually the prime sieve limit.
class CapacityError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A numerical self-check tripped (e.g. B_q picked up an imaginary part).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pshua
