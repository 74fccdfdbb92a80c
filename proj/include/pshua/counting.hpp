#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pshua/gamma.hpp"
#include "pshua/sieve.hpp"

namespace pshua {

// Ordered representations N = p1 + p2 + p3^k. Each slot may be restricted to
// a Piatetski-Shapiro set; the weighted count gives slot i the weight
// p^(1-g_i)/g_i (1 for an unrestricted slot), matching the circle integral
// of T_{1,1} T_{1,2} T_3.
struct RepQuery {
  std::uint64_t N = 0;
  unsigned k = 3;
  std::array<std::optional<GammaParam>, 3> slots{};
  bool weighted = false;
};

struct RepCount {
  std::uint64_t count = 0;  // ordered triples satisfying every slot constraint
  double weighted = 0.0;    // sum of slot-weight products (equals count when unweighted)
};

enum class ConvolutionMethod { automatic, direct, transform };

// Slot-1 * slot-2 convolution up to `limit`, probed at N - p3^k. Build once
// and query many N.
class RepresentationCounter {
 public:
  RepresentationCounter(std::uint64_t limit, unsigned k, const std::array<std::optional<GammaParam>, 3>& slots,
                        const PrimeSieve& sieve, ConvolutionMethod method = ConvolutionMethod::automatic);

  RepCount count(std::uint64_t N) const;
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  unsigned k_;
  std::vector<std::uint64_t> conv_count_;
  std::vector<double> conv_weight_;
  std::vector<std::uint64_t> third_power_;  // p3^k ascending
  std::vector<double> third_weight_;
};

// Counts for a single N; uses the direct probe for N <= 10^6 and the
// transform convolution above that.
RepCount count_hua(const RepQuery& query, const PrimeSieve& sieve);

std::uint64_t count_all_ps(std::uint64_t N, unsigned k, const GammaParam& g1, const GammaParam& g2,
                           const GammaParam& g3, const PrimeSieve& sieve);

// One row of the exact-count versus main-term comparison,
// main = k^2/(k+1) * S(N,k) * N^(1+1/k) / log^3 N.
struct AsymptoticRow {
  std::uint64_t N = 0;
  unsigned k = 1;
  std::uint64_t cutoff = 0;
  std::uint64_t exact_count = 0;
  double singular_series = 0.0;
  double coefficient = 0.0;  // k^2/(k+1)
  double main_term = 0.0;
  double ratio = 0.0;
};

double main_term_coefficient(unsigned k);

// N >= 3 odd. For k = 1 and even N the singular series vanishes: DomainError.
AsymptoticRow main_term(std::uint64_t N, unsigned k, std::uint64_t cutoff, const PrimeSieve& sieve);

}  // namespace pshua
