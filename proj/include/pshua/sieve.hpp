#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace pshua {

// Primality table for 0..limit, stored as a little-endian LSB-first bitset so
// that the in-memory layout is the cache file payload.
//
// Cache file: "PSHUASV1" | limit as 8 bytes little endian | ceil((limit+1)/8)
// bytes of bitset.
class PrimeSieve {
 public:
  enum class Source { fresh, loaded_from_cache };

  // Segmented Eratosthenes. Segments are distributed over `threads` workers.
  explicit PrimeSieve(std::uint64_t limit, unsigned threads = 1);

  static PrimeSieve load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;
  // Loads the cache when it exists with exactly this limit, otherwise sieves
  // and rewrites it.
  static PrimeSieve load_or_build(std::uint64_t limit, const std::filesystem::path& path,
                                  unsigned threads = 1);

  std::uint64_t limit() const { return limit_; }
  Source source() const { return source_; }

  bool is_prime(std::uint64_t n) const;
  // Ascending list of all primes <= limit.
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  // Primes <= x as a view into primes(). Throws CapacityError if x > limit.
  std::span<const std::uint64_t> primes_up_to(std::uint64_t x) const;
  std::size_t pi(std::uint64_t x) const { return primes_up_to(x).size(); }

  std::span<const std::uint8_t> bits() const { return bits_; }

  friend bool operator==(const PrimeSieve& a, const PrimeSieve& b) {
    return a.limit_ == b.limit_ && a.bits_ == b.bits_;
  }

 private:
  PrimeSieve() = default;
  void collect_primes();

  std::uint64_t limit_ = 0;
  Source source_ = Source::fresh;
  std::vector<std::uint8_t> bits_;
  std::vector<std::uint64_t> primes_;
};

}  // namespace pshua
