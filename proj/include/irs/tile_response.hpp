// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "irs/geometry.hpp"

namespace irs {

// Rectangular reflecting tile, len_x by len_y meters, centered on the grid
// point (k_x * len_x, k_y * len_y) of the surface plane. rho_eff in (0, 1]
// models reflection efficiency. The response functions below evaluate the
// reference tile at the origin; grid placement enters as a pure phase factor
// (see tile_translated_response in codebook.hpp).
struct TileSpec {
  double len_x;
  double len_y;
  double rho_eff;
  int k_x = 0;
  int k_y = 0;

  TileSpec(double lx, double ly, double rho, int kx = 0, int ky = 0);
};

// Unit-cell lattice realizing a tile as q_x * q_y discrete elements. Cell
// (n_x, n_y) sits at (n_x * d_x, n_y * d_y) with n_x in
// {-ceil(q_x/2)+1, ..., floor(q_x/2)}; for the usual even counts that is
// {-q_x/2+1, ..., q_x/2}, and q == 1 degenerates to the single cell n == 0.
// cell_edge is the radiating aperture edge of one cell,
// 0 < cell_edge <= min(d_x, d_y); cell_edge == spacing is the gap-free limit.
// phase_bits, when set, quantizes each per-cell phase to 2^phase_bits uniform
// levels.
struct DiscreteLattice {
  int q_x;
  int q_y;
  double d_x;
  double d_y;
  double cell_edge;
  std::optional<int> phase_bits;

  DiscreteLattice(int qx, int qy, double dx, double dy, double edge,
                  std::optional<int> bits = std::nullopt);
};

// Linear phase profile applied across a tile, in normalized parameters:
// beta(x, y) = 2k*beta_bar_x*x + 2k*beta_bar_y*y + 2*pi*beta_bar_0,
// each parameter in [-1, 1]. The constant term splits evenly across the two
// axes in the discrete realization (pi*beta_bar_0 per axis).
struct TransmissionMode {
  double beta_bar_x;
  double beta_bar_y;
  double beta_bar_0;

  TransmissionMode(double bx, double by, double b0);
};

// sin(x)/x, with sinc(0) = 1 via a small-argument series branch.
double sinc(double x);

// Polarization-and-geometry factor of the scattered amplitude:
// c(t) * || (cos(phi_pol)cos(theta_r)sin(phi_r) - sin(phi_pol)cos(theta_r)cos(phi_r),
//            sin(phi_pol)sin(phi_r) + cos(phi_pol)cos(phi_r)) ||_2.
// Dimensionless, in [0, 1]-ish range; equals cos(theta_t) in the canonical
// specular configuration and 1 at normal incidence/normal exit.
double g_tilde(const AngleTriple& t, const AnglePair& r);

// Largest possible |response| for a tile: sqrt(4*pi) * rho_eff * area / lambda.
// Attained when both sinc factors and g_tilde equal 1.
double peak_bound(const TileSpec& tile, const WaveSpec& wave);

// Mode whose response peak is steered from incident direction target_in to
// scattered direction target_out: beta_bar_i = -(A_i(in) + A_i(out))/2.
// beta_0 (radians, |beta_0| <= 2*pi) sets the common phase offset.
TransmissionMode mode_from_directions(const AngleTriple& target_in,
                                      const AnglePair& target_out,
                                      double beta_0 = 0.0);

// Scattered direction where a mode's response peaks for a given incident
// wave, i.e. where A_i(t) + A_i(r) = -2*beta_bar_i for both axes. Returns
// nullopt when that direction is evanescent (transverse norm > 1). Convention:
// a mode built by mode_from_directions(t, r) peaks back at r.
std::optional<AnglePair> mode_peak_direction(const TransmissionMode& mode,
                                             const AngleTriple& incident);

// Closed-form response of a continuous tile at the origin:
//   |g| = sqrt(4*pi)*rho_eff*len_x*len_y/lambda * g_tilde
//         * sinc(k*len_x*(A_x(t,r) + 2*beta_bar_x)/2)
//         * sinc(k*len_y*(A_y(t,r) + 2*beta_bar_y)/2)
//   arg g = pi/2 + 2*pi*beta_bar_0   (a negative product folds into the phase)
Complex continuous_tile_response(const AngleTriple& t, const AnglePair& r,
                                 const TransmissionMode& mode,
                                 const TileSpec& tile, const WaveSpec& wave);

// Response of the single unit cell (n_x, n_y) carrying per-axis phases
// cell_phase_x/y (already quantized by the caller if applicable):
//   j * sqrt(4*pi)*rho_eff*cell_edge^2/lambda * g_tilde
//     * exp(j*(k*d_x*A_x(t,r)*n_x + cell_phase_x))
//     * exp(j*(k*d_y*A_y(t,r)*n_y + cell_phase_y))
Complex unit_cell_response(int n_x, int n_y, double cell_phase_x,
                           double cell_phase_y, const AngleTriple& t,
                           const AnglePair& r, const DiscreteLattice& lattice,
                           double rho_eff, const WaveSpec& wave);

// Sum of unit_cell_response over the whole lattice with the mode's linear
// profile sampled at cell centers, cell phase beta_n = 2k*beta_bar*(n*d) +
// pi*beta_bar_0 per axis, optionally quantized to lattice.phase_bits levels.
// Evaluated as a separable per-axis product; identical to the brute-force
// double sum. The lattice must tile the TileSpec footprint
// (q_i * d_i == len_i).
Complex discrete_tile_response(const AngleTriple& t, const AnglePair& r,
                               const TransmissionMode& mode,
                               const TileSpec& tile,
                               const DiscreteLattice& lattice,
                               const WaveSpec& wave);

// Nearest level in {2*pi*k / 2^bits : k = 0..2^bits-1} to beta mod 2*pi,
// ties rounding toward the lower level; result in [0, 2*pi).
double quantize_phase(double beta, int bits);

// Reference integrator for the continuous response, sharing no code with the
// closed form: midpoint rule on a grid_n x grid_n mesh of
//   j*sqrt(4*pi)*rho_eff*g_tilde/lambda *
//     integral exp(j*k*(A_x*x + A_y*y) + j*beta(x, y)) dx dy
// refined by one Richardson step against the doubled mesh,
// (4*M(2n) - M(n))/3. grid_n >= 64.
Complex quadrature_oracle(const AngleTriple& t, const AnglePair& r,
                          const TransmissionMode& mode, const TileSpec& tile,
                          const WaveSpec& wave, int grid_n);

}  // namespace irs
