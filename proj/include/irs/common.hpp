// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace irs {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline const double kSqrt4Pi = std::sqrt(4.0 * std::numbers::pi);

// Vacuum speed of light, m/s (exact SI value).
inline constexpr double kSpeedOfLight = 299'792'458.0;

// Geometry that admits no field decomposition (the horizontal-projection
// normalization degenerates).
class DegenerateGeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed scenario or configuration input, with source context when known.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wraps an angle into [0, 2*pi).
inline double wrap_two_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod rounding can land exactly on 2*pi
  return r;
}

inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

}  // namespace irs
