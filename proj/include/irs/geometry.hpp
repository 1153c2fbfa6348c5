// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "irs/common.hpp"

namespace irs {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

// Incident plane wave seen from the reflecting plane: elevation theta_t
// measured from the surface normal, azimuth phi_t, and polarization angle
// phi_pol giving the azimuth of the magnetic-field projection onto the
// surface. Grazing incidence (theta_t == pi/2) is rejected: the field
// decomposition below degenerates there.
struct AngleTriple {
  double theta_t;
  double phi_t;
  double phi_pol;

  AngleTriple(double theta, double phi, double pol);
};

// Scattered/observation direction: elevation from the surface normal (the
// full front hemisphere, grazing included) and azimuth.
struct AnglePair {
  double theta_r;
  double phi_r;

  AnglePair(double theta, double phi);
};

// Carrier wavelength in meters and the derived wavenumber k = 2*pi/lambda.
struct WaveSpec {
  double lambda;

  explicit WaveSpec(double wavelength);
  double wavenumber() const { return kTwoPi / lambda; }
  static WaveSpec from_frequency(double hertz);
};

// Unit propagation direction (sin(theta)cos(phi), sin(theta)sin(phi),
// cos(theta)) for an elevation/azimuth pair; theta in [0, pi/2].
Vec3 propagation_direction(double theta, double phi);
inline Vec3 propagation_direction(const AngleTriple& t) {
  return propagation_direction(t.theta_t, t.phi_t);
}
inline Vec3 propagation_direction(const AnglePair& r) {
  return propagation_direction(r.theta_r, r.phi_r);
}

// Normalization factor c = A_z / sqrt(A_xy^2 + A_z^2) with
// A_xy = cos(phi_pol)*A_x + sin(phi_pol)*A_y; always in [cos(theta_t), 1].
double c_factor(const AngleTriple& t);

// Right-handed orthonormal field frame for an incident wave: a_h is the
// magnetic-field direction, a_e = a_h x a_t the electric-field direction.
struct PolarizationBasis {
  Vec3 a_e;
  Vec3 a_h;
};

// sign_b in {+1, -1} flips both basis vectors together (a global phase-pi
// convention); it never affects scattering magnitudes.
PolarizationBasis polarization_basis(const AngleTriple& t, int sign_b = +1);

// Transverse direction-cosine sums A_i(t, r) = A_i(t) + A_i(r), i in {x, y}.
struct TransverseSum {
  double x;
  double y;
};
TransverseSum direction_cosine_sum(const AngleTriple& t, const AnglePair& r);

}  // namespace irs
