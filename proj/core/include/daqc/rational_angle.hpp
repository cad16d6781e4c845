#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "daqc/errors.hpp"
#include "daqc/units.hpp"

namespace daqc {

/// An angle stored as an exact rational multiple of pi.
///
/// Drive phases are always rational multiples of pi (2pi, pi, pi/2, 3pi/2),
/// and the interaction tables rely on cos/sin of those phases being exactly
/// 0 or +-1. Keeping the rational form makes "coefficient == 0" hold exactly
/// instead of up to 1e-16 dross.
class RationalAngle {
 public:
  constexpr RationalAngle() = default;
  RationalAngle(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw ValidationError("RationalAngle: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static RationalAngle pi_times(std::int64_t num, std::int64_t den = 1) {
    return RationalAngle(num, den);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double radians() const { return kPi * static_cast<double>(num_) / static_cast<double>(den_); }

  /// Exact for half-integer multiples of pi; falls back to std::cos otherwise.
  double cos() const;
  double sin() const;

  /// Renders the multiple of pi, e.g. "2", "1/2", "3/2".
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline double RationalAngle::cos() const {
  if (den_ == 1 || den_ == 2) {
    // Angle is k * pi/2; reduce k mod 4.
    std::int64_t k = (den_ == 1) ? 2 * num_ : num_;
    k %= 4;
    if (k < 0) k += 4;
    switch (k) {
      case 0: return 1.0;
      case 1: return 0.0;
      case 2: return -1.0;
      default: return 0.0;
    }
  }
  return std::cos(radians());
}

inline double RationalAngle::sin() const {
  if (den_ == 1 || den_ == 2) {
    std::int64_t k = (den_ == 1) ? 2 * num_ : num_;
    k %= 4;
    if (k < 0) k += 4;
    switch (k) {
      case 0: return 0.0;
      case 1: return 1.0;
      case 2: return 0.0;
      default: return -1.0;
    }
  }
  return std::sin(radians());
}

}  // namespace daqc
