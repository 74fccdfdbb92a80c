#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pshua {

// Values of sum_j coefs[j] e(freqs[j] * k / M) for k = 0..M-1.
std::vector<std::complex<double>> sample_uniform(std::span<const std::uint64_t> freqs,
                                                 std::span<const double> coefs, std::size_t M);

// Linear convolution of two real sequences, truncated to out_len entries.
std::vector<double> convolve_real(std::span<const double> a, std::span<const double> b,
                                  std::size_t out_len);

// Smallest 2^a 3^b 5^c 7^d >= n.
std::size_t smooth_size(std::size_t n);

}  // namespace pshua
