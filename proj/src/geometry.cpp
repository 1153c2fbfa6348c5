// SPDX-License-Identifier: Apache-2.0
#include "irs/geometry.hpp"

#include <cmath>
#include <string>

namespace irs {

namespace {

void check_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw std::domain_error(std::string(name) + " must be finite");
  }
}

void check_azimuth(double v, const char* name) {
  check_finite(v, name);
  if (v < 0.0 || v >= kTwoPi) {
    throw std::domain_error(std::string(name) + " must lie in [0, 2*pi)");
  }
}

}  // namespace

AngleTriple::AngleTriple(double theta, double phi, double pol)
    : theta_t(theta), phi_t(phi), phi_pol(pol) {
  check_finite(theta, "theta_t");
  if (theta < 0.0 || theta >= kPi / 2.0) {
    throw std::domain_error("theta_t must lie in [0, pi/2); grazing incidence has no field decomposition");
  }
  check_azimuth(phi, "phi_t");
  check_azimuth(pol, "phi_pol");
}

AnglePair::AnglePair(double theta, double phi) : theta_r(theta), phi_r(phi) {
  check_finite(theta, "theta_r");
  if (theta < 0.0 || theta > kPi / 2.0) {
    throw std::domain_error("theta_r must lie in [0, pi/2]");
  }
  check_azimuth(phi, "phi_r");
}

WaveSpec::WaveSpec(double wavelength) : lambda(wavelength) {
  check_finite(wavelength, "lambda");
  if (wavelength <= 0.0) {
    throw std::domain_error("lambda must be positive");
  }
}

WaveSpec WaveSpec::from_frequency(double hertz) {
  check_finite(hertz, "frequency");
  if (hertz <= 0.0) {
    throw std::domain_error("frequency must be positive");
  }
  return WaveSpec(kSpeedOfLight / hertz);
}

Vec3 propagation_direction(double theta, double phi) {
  check_finite(theta, "theta");
  check_azimuth(phi, "phi");
  if (theta < 0.0 || theta > kPi / 2.0) {
    throw std::domain_error("theta must lie in [0, pi/2]");
  }
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

double c_factor(const AngleTriple& t) {
  const Vec3 a = propagation_direction(t);
  const double a_xy = std::cos(t.phi_pol) * a.x + std::sin(t.phi_pol) * a.y;
  const double r = std::hypot(a_xy, a.z);
  // a.z = cos(theta_t) > 0 for theta_t < pi/2, so r > 0 always holds here;
  // the guard documents the degenerate grazing limit.
  if (r == 0.0) {
    throw DegenerateGeometryError("field decomposition degenerates: zero horizontal-projection norm");
  }
  return a.z / r;
}

PolarizationBasis polarization_basis(const AngleTriple& t, int sign_b) {
  if (sign_b != 1 && sign_b != -1) {
    throw std::domain_error("sign_b must be +1 or -1");
  }
  const Vec3 a_t = propagation_direction(t);
  const double a_xy = std::cos(t.phi_pol) * a_t.x + std::sin(t.phi_pol) * a_t.y;
  const double r = std::hypot(a_xy, a_t.z);
  if (r == 0.0) {
    throw DegenerateGeometryError("field decomposition degenerates: zero horizontal-projection norm");
  }
  const double c = a_t.z / r;
  const double b = static_cast<double>(sign_b);
  // The vertical component takes the signed branch -a_xy/r (equal to
  // +sqrt(1-c^2) whenever a_xy <= 0); the principal root would break
  // orthogonality to a_t for a_xy > 0.
  const Vec3 a_h{b * c * std::cos(t.phi_pol), b * c * std::sin(t.phi_pol), b * (-a_xy / r)};
  return PolarizationBasis{a_h.cross(a_t), a_h};
}

TransverseSum direction_cosine_sum(const AngleTriple& t, const AnglePair& r) {
  const Vec3 at = propagation_direction(t);
  const Vec3 ar = propagation_direction(r);
  return {at.x + ar.x, at.y + ar.y};
}

}  // namespace irs
