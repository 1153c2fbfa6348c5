// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "irs/codebook.hpp"

namespace irs {

// Antenna array described by its element positions, in units of the carrier
// wavelength. At least one element.
struct ArrayGeometry {
  std::vector<Vec3> elements;

  explicit ArrayGeometry(std::vector<Vec3> e);
  std::size_t size() const { return elements.size(); }
};

// One scatterer of a transmitter-to-receiver link bypassing the surface.
struct DirectPath {
  AnglePair departure;  // angle of departure at the transmitter
  AnglePair arrival;    // angle of arrival at the receiver
  Complex gain;
};

// One transmitter-to-surface path: departure at the array, arrival at the
// surface as a full incident-wave triple (the polarization state matters).
struct IncidentPath {
  AnglePair departure;
  AngleTriple arrival_irs;
  Complex gain;
};

// One surface-to-receiver path.
struct OutgoingPath {
  AnglePair departure_irs;
  AnglePair arrival;
  Complex gain;
};

// Complete multi-terminal scenario. direct[j][i] lists the paths from
// transmitter i to receiver j (the l-th departure pairs with the l-th arrival
// and gain); incident[i] the paths from transmitter i to the surface;
// outgoing[j] the paths from the surface to receiver j.
struct ChannelScenario {
  std::vector<ArrayGeometry> transmitters;
  std::vector<ArrayGeometry> receivers;
  IrsLayout layout;
  Codebook codebook;
  std::vector<std::vector<std::vector<DirectPath>>> direct;
  std::vector<std::vector<IncidentPath>> incident;
  std::vector<std::vector<OutgoingPath>> outgoing;
  double noise_variance = 0.0;
  std::uint64_t rng_seed = 0;

  // Shape checks: direct is J x I, incident is I-long, outgoing is J-long,
  // noise_variance >= 0. Throws ConfigError.
  void validate() const;
};

// Codebook index assigned to each tile, assignment[n] in [0, M).
struct ModeSelection {
  std::vector<std::size_t> assignment;
};

// Steering vector with element phases +2*pi*(direction . p_l); positions are
// in wavelengths, so no explicit wavelength enters.
Eigen::VectorXcd steering_vector(const ArrayGeometry& array, const Vec3& direction);

// Surface-bounce inner matrix for one (receiver, transmitter) pair: entry
// (n_r, n_t) sums the translated responses of every tile under its selected
// mode, evaluated at the n_t-th incident and n_r-th outgoing path angles.
Eigen::MatrixXcd assemble_scatter_matrix(std::size_t receiver, std::size_t transmitter,
                                         const ModeSelection& selection,
                                         const ChannelScenario& scenario);

// Full end-to-end matrix for one (receiver, transmitter) pair:
//   H = A_d * diag(direct gains) * D_d^H
//     + A_r * diag(outgoing gains) * G * diag(incident gains) * D_t^H
// where A_* stack receive steering vectors column-wise and D_* transmit ones.
Eigen::MatrixXcd end_to_end_matrix(std::size_t receiver, std::size_t transmitter,
                                   const ModeSelection& selection,
                                   const ChannelScenario& scenario);

// Received vectors y_j = sum_i H^(j,i) x_i + noise for every receiver. Noise
// is zero-mean circular complex Gaussian of variance noise_variance per
// element, drawn from a counter-based stream keyed by (rng_seed, receiver,
// realization, element): a fixed key always yields the same sample, and
// noise_variance == 0 yields the exact linear map.
std::vector<Eigen::VectorXcd> apply_channel(const ModeSelection& selection,
                                            const ChannelScenario& scenario,
                                            const std::vector<Eigen::VectorXcd>& transmit,
                                            std::uint64_t realization = 0);

// Power ratio of a surface-bounced link to the direct link in free space:
// area^2 * rho_d^2 / (lambda^2 * rho_t^2 * rho_r^2). Equals 1 when
// area == required_irs_area(...).
double link_budget_ratio(double rho_d, double rho_t, double rho_r,
                         double irs_area, const WaveSpec& wave);

// Aperture area that makes the bounced link match the direct link:
// lambda * rho_t * rho_r / rho_d.
double required_irs_area(double rho_d, double rho_t, double rho_r,
                         const WaveSpec& wave);

// Free-space amplitude gain of one leg of length `distance`:
// 1 / (sqrt(4*pi) * distance).
double free_space_gain(double distance);

}  // namespace irs
