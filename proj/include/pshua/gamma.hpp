#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pshua {

// Exact rational exponent gamma = numerator/denominator in (0, 1], kept in
// lowest terms. The reciprocal c = 1/gamma is never stored.
class GammaParam {
 public:
  GammaParam(std::uint32_t numerator, std::uint32_t denominator);

  // Accepts "a/b" or "1".
  static GammaParam parse(std::string_view text);
  static GammaParam one() { return GammaParam(1, 1); }

  std::uint32_t numerator() const { return num_; }
  std::uint32_t denominator() const { return den_; }
  bool is_one() const { return num_ == den_; }
  double value() const { return static_cast<double>(num_) / den_; }
  mpq_class rational() const { return mpq_class(num_, den_); }
  std::string str() const;

  friend bool operator==(const GammaParam&, const GammaParam&) = default;

 private:
  std::uint32_t num_;
  std::uint32_t den_;
};

}  // namespace pshua
