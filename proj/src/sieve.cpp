#include "pshua/sieve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>
#include <thread>

#include "pshua/errors.hpp"

namespace pshua {
namespace {

constexpr std::array<char, 8> kMagic = {'P', 'S', 'H', 'U', 'A', 'S', 'V', '1'};
// Numbers per segment; a multiple of 8 so segments own whole bytes.
constexpr std::uint64_t kSegmentSpan = std::uint64_t{1} << 19;

std::vector<std::uint32_t> small_primes(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

void sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& base,
                   std::uint8_t* bits) {
  // [lo, hi] inclusive, lo a multiple of 8
  for (std::uint64_t n = lo; n <= hi; ++n) bits[n >> 3] |= std::uint8_t(1u << (n & 7));
  for (std::uint32_t p : base) {
    const std::uint64_t pp = std::uint64_t{p} * p;
    if (pp > hi) break;
    std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
    for (std::uint64_t m = start; m <= hi; m += p) bits[m >> 3] &= std::uint8_t(~(1u << (m & 7)));
  }
  for (std::uint64_t n = lo; n <= std::min<std::uint64_t>(hi, 1); ++n) {
    bits[n >> 3] &= std::uint8_t(~(1u << (n & 7)));
  }
}

void write_le64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> buf{};
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf.data(), 8);
}

std::uint64_t read_le64(const std::array<unsigned char, 8>& buf) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | buf[i];
  return v;
}

}  // namespace

PrimeSieve::PrimeSieve(std::uint64_t limit, unsigned threads) : limit_(limit) {
  bits_.assign(limit / 8 + 1, 0);
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(limit))) + 1;
  const auto base = small_primes(root);

  const std::uint64_t segments = limit / kSegmentSpan + 1;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(segments)));
  auto worker = [&](unsigned id) {
    for (std::uint64_t s = id; s < segments; s += threads) {
      const std::uint64_t lo = s * kSegmentSpan;
      const std::uint64_t hi = std::min(limit, lo + kSegmentSpan - 1);
      sieve_segment(lo, hi, base, bits_.data());
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  collect_primes();
}

void PrimeSieve::collect_primes() {
  primes_.clear();
  if (limit_ >= 2) {
    primes_.reserve(static_cast<std::size_t>(1.3 * limit_ / std::log(static_cast<double>(limit_))) + 16);
  }
  for (std::uint64_t n = 2; n <= limit_; ++n) {
    if (bits_[n >> 3] >> (n & 7) & 1) primes_.push_back(n);
  }
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
  if (n > limit_) {
    throw CapacityError("primality query " + std::to_string(n) + " beyond sieve limit " +
                        std::to_string(limit_));
  }
  return bits_[n >> 3] >> (n & 7) & 1;
}

std::span<const std::uint64_t> PrimeSieve::primes_up_to(std::uint64_t x) const {
  if (x > limit_) {
    throw CapacityError("range " + std::to_string(x) + " beyond sieve limit " +
                        std::to_string(limit_));
  }
  const auto end = std::upper_bound(primes_.begin(), primes_.end(), x);
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

void PrimeSieve::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write sieve cache " + path.string());
  out.write(kMagic.data(), kMagic.size());
  write_le64(out, limit_);
  out.write(reinterpret_cast<const char*>(bits_.data()), static_cast<std::streamsize>(bits_.size()));
  if (!out) throw std::runtime_error("short write to sieve cache " + path.string());
}

PrimeSieve PrimeSieve::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open sieve cache " + path.string());
  std::array<char, 8> magic{};
  std::array<unsigned char, 8> len{};
  in.read(magic.data(), magic.size());
  in.read(reinterpret_cast<char*>(len.data()), len.size());
  if (!in || magic != kMagic) throw std::runtime_error("bad sieve cache header in " + path.string());

  PrimeSieve s;
  s.limit_ = read_le64(len);
  s.source_ = Source::loaded_from_cache;
  s.bits_.resize(s.limit_ / 8 + 1);
  in.read(reinterpret_cast<char*>(s.bits_.data()), static_cast<std::streamsize>(s.bits_.size()));
  if (!in) throw std::runtime_error("truncated sieve cache " + path.string());
  if (in.peek() != std::ifstream::traits_type::eof()) {
    throw std::runtime_error("trailing bytes in sieve cache " + path.string());
  }
  s.collect_primes();
  return s;
}

PrimeSieve PrimeSieve::load_or_build(std::uint64_t limit, const std::filesystem::path& path,
                                     unsigned threads) {
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    try {
      PrimeSieve cached = load(path);
      if (cached.limit() == limit) return cached;
    } catch (const std::runtime_error&) {
      // unreadable cache is rebuilt below
    }
  }
  PrimeSieve fresh(limit, threads);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  fresh.save(path);
  return fresh;
}

}  // namespace pshua
