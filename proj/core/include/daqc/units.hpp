#pragma once

#include <numbers>

namespace daqc {

// Internal unit system: angular frequency in rad/ns, time in ns.
// Every interface that takes "GHz" means omega/2pi and converts here.

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double ghz_to_rad_per_ns(double f_ghz) { return kTwoPi * f_ghz; }
constexpr double rad_per_ns_to_ghz(double w) { return w / kTwoPi; }

}  // namespace daqc
