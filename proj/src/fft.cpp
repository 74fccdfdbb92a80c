#include "pshua/fft.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include <fftw3.h>

namespace pshua {
namespace {

// fftw's planner is not re-entrant
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t bytes) : ptr(fftw_malloc(bytes)) {
    if (ptr == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  void* ptr;
};

struct Plan {
  explicit Plan(fftw_plan p) : plan(p) {}
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  fftw_plan plan;
};

}  // namespace

std::size_t smooth_size(std::size_t n) {
  std::size_t best = 1;
  while (best < n) best <<= 1;
  for (std::size_t p7 = 1; p7 <= best; p7 *= 7)
    for (std::size_t p5 = p7; p5 <= best; p5 *= 5)
      for (std::size_t p3 = p5; p3 <= best; p3 *= 3) {
        std::size_t v = p3;
        while (v < n) v <<= 1;
        best = std::min(best, v);
      }
  return best;
}

std::vector<std::complex<double>> sample_uniform(std::span<const std::uint64_t> freqs,
                                                 std::span<const double> coefs, std::size_t M) {
  FftwBuffer buf(sizeof(fftw_complex) * M);
  auto* data = static_cast<fftw_complex*>(buf.ptr);
  std::unique_ptr<Plan> plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = std::make_unique<Plan>(
        fftw_plan_dft_1d(static_cast<int>(M), data, data, FFTW_BACKWARD, FFTW_ESTIMATE));
  }
  std::fill_n(&data[0][0], 2 * M, 0.0);
  for (std::size_t j = 0; j < freqs.size(); ++j) data[freqs[j] % M][0] += coefs[j];
  fftw_execute(plan->plan);
  std::vector<std::complex<double>> out(M);
  for (std::size_t k = 0; k < M; ++k) out[k] = {data[k][0], data[k][1]};
  return out;
}

std::vector<double> convolve_real(std::span<const double> a, std::span<const double> b,
                                  std::size_t out_len) {
  const std::size_t n = smooth_size(a.size() + b.size());
  const std::size_t nc = n / 2 + 1;
  FftwBuffer ra(sizeof(double) * n), rb(sizeof(double) * n);
  FftwBuffer ca(sizeof(fftw_complex) * nc), cb(sizeof(fftw_complex) * nc);
  auto* xa = static_cast<double*>(ra.ptr);
  auto* xb = static_cast<double*>(rb.ptr);
  auto* fa = static_cast<fftw_complex*>(ca.ptr);
  auto* fb = static_cast<fftw_complex*>(cb.ptr);
  std::unique_ptr<Plan> pa, pb, pinv;
  {
    std::lock_guard lock(planner_mutex());
    pa = std::make_unique<Plan>(fftw_plan_dft_r2c_1d(static_cast<int>(n), xa, fa, FFTW_ESTIMATE));
    pb = std::make_unique<Plan>(fftw_plan_dft_r2c_1d(static_cast<int>(n), xb, fb, FFTW_ESTIMATE));
    pinv = std::make_unique<Plan>(fftw_plan_dft_c2r_1d(static_cast<int>(n), fa, xa, FFTW_ESTIMATE));
  }
  std::fill_n(xa, n, 0.0);
  std::fill_n(xb, n, 0.0);
  std::copy(a.begin(), a.end(), xa);
  std::copy(b.begin(), b.end(), xb);
  fftw_execute(pa->plan);
  fftw_execute(pb->plan);
  for (std::size_t k = 0; k < nc; ++k) {
    const double re = fa[k][0] * fb[k][0] - fa[k][1] * fb[k][1];
    const double im = fa[k][0] * fb[k][1] + fa[k][1] * fb[k][0];
    fa[k][0] = re;
    fa[k][1] = im;
  }
  fftw_execute(pinv->plan);
  std::vector<double> out(std::min(out_len, n));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = xa[k] / static_cast<double>(n);
  out.resize(out_len, 0.0);
  return out;
}

}  // namespace pshua
