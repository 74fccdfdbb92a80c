#include "pshua/counting.hpp"

#include <cmath>
#include <string>

#include "pshua/errors.hpp"
#include "pshua/fft.hpp"
#include "pshua/psprimes.hpp"
#include "pshua/singular.hpp"

namespace pshua {
namespace {

constexpr std::uint64_t kDirectLimit = 1'000'000;

struct Slot {
  std::vector<std::uint64_t> primes;
  std::vector<double> weights;
};

Slot make_slot(std::uint64_t x, const std::optional<GammaParam>& gamma, const PrimeSieve& sieve) {
  Slot s;
  if (gamma) {
    s.primes = ps_primes_up_to(x, *gamma, sieve);
  } else {
    const auto view = sieve.primes_up_to(x);
    s.primes.assign(view.begin(), view.end());
  }
  s.weights.resize(s.primes.size(), 1.0);
  if (gamma) {
    for (std::size_t i = 0; i < s.primes.size(); ++i) s.weights[i] = ps_weight(s.primes[i], *gamma);
  }
  return s;
}

void check_k(unsigned k) {
  if (k < 1 || k > 3) throw DomainError("representation counts support k in {1,2,3}");
}

std::uint64_t ipow(std::uint64_t p, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

// Third-slot primes with p^k <= limit.
Slot make_third_slot(std::uint64_t limit, unsigned k, const std::optional<GammaParam>& gamma,
                     const PrimeSieve& sieve) {
  std::uint64_t range = 0;
  while (ipow(range + 1, k) <= limit) ++range;
  return make_slot(range, gamma, sieve);
}

}  // namespace

RepresentationCounter::RepresentationCounter(std::uint64_t limit, unsigned k,
                                             const std::array<std::optional<GammaParam>, 3>& slots,
                                             const PrimeSieve& sieve, ConvolutionMethod method)
    : limit_(limit), k_(k) {
  check_k(k);
  if (limit > sieve.limit()) {
    throw CapacityError("count up to " + std::to_string(limit) + " beyond sieve limit " +
                        std::to_string(sieve.limit()));
  }
  const Slot s1 = make_slot(limit, slots[0], sieve);
  const Slot s2 = make_slot(limit, slots[1], sieve);
  const Slot s3 = make_third_slot(limit, k, slots[2], sieve);
  for (std::size_t i = 0; i < s3.primes.size(); ++i) third_power_.push_back(ipow(s3.primes[i], k));
  third_weight_ = s3.weights;

  if (method == ConvolutionMethod::automatic) {
    method = limit <= kDirectLimit ? ConvolutionMethod::direct : ConvolutionMethod::transform;
  }
  conv_count_.assign(limit + 1, 0);
  conv_weight_.assign(limit + 1, 0.0);
  if (method == ConvolutionMethod::direct) {
    for (std::size_t i = 0; i < s1.primes.size(); ++i) {
      const std::uint64_t p1 = s1.primes[i];
      for (std::size_t j = 0; j < s2.primes.size() && p1 + s2.primes[j] <= limit; ++j) {
        conv_count_[p1 + s2.primes[j]] += 1;
        conv_weight_[p1 + s2.primes[j]] += s1.weights[i] * s2.weights[j];
      }
    }
  } else {
    std::vector<double> ind1(limit + 1, 0.0), ind2(limit + 1, 0.0);
    std::vector<double> w1(limit + 1, 0.0), w2(limit + 1, 0.0);
    for (std::size_t i = 0; i < s1.primes.size(); ++i) {
      ind1[s1.primes[i]] = 1.0;
      w1[s1.primes[i]] = s1.weights[i];
    }
    for (std::size_t j = 0; j < s2.primes.size(); ++j) {
      ind2[s2.primes[j]] = 1.0;
      w2[s2.primes[j]] = s2.weights[j];
    }
    const auto counts = convolve_real(ind1, ind2, limit + 1);
    const auto weights = convolve_real(w1, w2, limit + 1);
    for (std::uint64_t m = 0; m <= limit; ++m) {
      conv_count_[m] = static_cast<std::uint64_t>(std::llround(counts[m]));
      conv_weight_[m] = weights[m];
    }
  }
}

RepCount RepresentationCounter::count(std::uint64_t N) const {
  if (N > limit_) {
    throw CapacityError("N=" + std::to_string(N) + " beyond counter limit " + std::to_string(limit_));
  }
  RepCount out;
  double weighted = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < third_power_.size() && third_power_[i] < N; ++i) {
    const std::uint64_t rest = N - third_power_[i];
    out.count += conv_count_[rest];
    const double term = third_weight_[i] * conv_weight_[rest];
    const double t = weighted + term;
    comp += std::fabs(weighted) >= std::fabs(term) ? (weighted - t) + term : (term - t) + weighted;
    weighted = t;
  }
  out.weighted = weighted + comp;
  return out;
}

RepCount count_hua(const RepQuery& query, const PrimeSieve& sieve) {
  check_k(query.k);
  const std::uint64_t N = query.N;
  if (N > sieve.limit()) {
    throw CapacityError("count_hua: N=" + std::to_string(N) + " beyond sieve limit " +
                        std::to_string(sieve.limit()));
  }
  if (N > kDirectLimit) {
    RepresentationCounter counter(N, query.k, query.slots, sieve, ConvolutionMethod::transform);
    RepCount c = counter.count(N);
    if (!query.weighted) c.weighted = static_cast<double>(c.count);
    return c;
  }
  // Direct probe: for each p3, sum over p1 of [N - p3^k - p1 in slot 2].
  const Slot s1 = make_slot(N, query.slots[0], sieve);
  const Slot s2 = make_slot(N, query.slots[1], sieve);
  const Slot s3 = make_third_slot(N, query.k, query.slots[2], sieve);
  std::vector<double> w2(N + 1, 0.0);
  std::vector<std::uint8_t> in2(N + 1, 0);
  for (std::size_t j = 0; j < s2.primes.size(); ++j) {
    in2[s2.primes[j]] = 1;
    w2[s2.primes[j]] = s2.weights[j];
  }
  RepCount out;
  double weighted = 0.0, comp = 0.0;
  for (std::size_t t = 0; t < s3.primes.size(); ++t) {
    const std::uint64_t power = ipow(s3.primes[t], query.k);
    if (power >= N) break;
    const std::uint64_t rest = N - power;
    for (std::size_t i = 0; i < s1.primes.size() && s1.primes[i] < rest; ++i) {
      const std::uint64_t p2 = rest - s1.primes[i];
      if (!in2[p2]) continue;
      ++out.count;
      const double term = s3.weights[t] * s1.weights[i] * w2[p2];
      const double sum = weighted + term;
      comp += std::fabs(weighted) >= std::fabs(term) ? (weighted - sum) + term : (term - sum) + weighted;
      weighted = sum;
    }
  }
  out.weighted = query.weighted ? weighted + comp : static_cast<double>(out.count);
  return out;
}

std::uint64_t count_all_ps(std::uint64_t N, unsigned k, const GammaParam& g1, const GammaParam& g2,
                           const GammaParam& g3, const PrimeSieve& sieve) {
  RepQuery q;
  q.N = N;
  q.k = k;
  q.slots = {g1, g2, g3};
  return count_hua(q, sieve).count;
}

double main_term_coefficient(unsigned k) {
  return static_cast<double>(k) * k / (k + 1.0);
}

AsymptoticRow main_term(std::uint64_t N, unsigned k, std::uint64_t cutoff, const PrimeSieve& sieve) {
  check_k(k);
  if (N < 3) throw DomainError("main_term: N must be at least 3");
  const EulerProductEstimate s = singular_series_hua(N, k, cutoff);
  if (s.vanishes) {
    throw DomainError("main_term: singular series vanishes for N=" + std::to_string(N) +
                      " (local factor at p=" + std::to_string(s.vanishing_prime) + " is zero)");
  }
  AsymptoticRow row;
  row.N = N;
  row.k = k;
  row.cutoff = cutoff;
  RepQuery q;
  q.N = N;
  q.k = k;
  row.exact_count = count_hua(q, sieve).count;
  row.singular_series = s.value;
  row.coefficient = main_term_coefficient(k);
  const double nd = static_cast<double>(N);
  const double log_n = std::log(nd);
  row.main_term = row.coefficient * s.value * std::pow(nd, 1.0 + 1.0 / k) / (log_n * log_n * log_n);
  row.ratio = static_cast<double>(row.exact_count) / row.main_term;
  return row;
}

}  // namespace pshua
