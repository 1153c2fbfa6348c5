// SPDX-License-Identifier: Apache-2.0
#include "irs/channel.hpp"

#include <cmath>
#include <map>
#include <string>
#include <utility>

namespace irs {

namespace {

void check_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::domain_error(std::string(name) + " must be positive and finite");
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Unit-variance circular complex Gaussian addressed by key, never by call
// order: the same (seed, receiver, realization, element) always reproduces
// the same sample.
Complex keyed_unit_gaussian(std::uint64_t seed, std::uint64_t receiver,
                            std::uint64_t realization, std::uint64_t element) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ receiver);
  h = splitmix64(h ^ realization);
  h = splitmix64(h ^ element);
  const std::uint64_t h2 = splitmix64(h ^ 0xda3e39cb94b95bdbULL);
  // (0, 1] and [0, 1) uniforms from the top 53 bits.
  const double u1 = (static_cast<double>(h >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(h2 >> 11) * 0x1.0p-53;
  const double radius = std::sqrt(-std::log(u1));  // E[radius^2] = 1
  return Complex(radius * std::cos(kTwoPi * u2), radius * std::sin(kTwoPi * u2));
}

}  // namespace

ArrayGeometry::ArrayGeometry(std::vector<Vec3> e) : elements(std::move(e)) {
  if (elements.empty()) {
    throw std::domain_error("array must have at least one element");
  }
  for (const Vec3& p : elements) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw std::domain_error("array element positions must be finite");
    }
  }
}

void ChannelScenario::validate() const {
  const std::size_t num_tx = transmitters.size();
  const std::size_t num_rx = receivers.size();
  if (direct.size() != num_rx) {
    throw ConfigError("direct paths must have one row per receiver");
  }
  for (const auto& row : direct) {
    if (row.size() != num_tx) {
      throw ConfigError("each direct-path row must have one entry per transmitter");
    }
  }
  if (incident.size() != num_tx) {
    throw ConfigError("incident paths must have one list per transmitter");
  }
  if (outgoing.size() != num_rx) {
    throw ConfigError("outgoing paths must have one list per receiver");
  }
  if (!(noise_variance >= 0.0) || !std::isfinite(noise_variance)) {
    throw ConfigError("noise_variance must be finite and >= 0");
  }
}

Eigen::VectorXcd steering_vector(const ArrayGeometry& array, const Vec3& direction) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(array.size()));
  for (Eigen::Index l = 0; l < v.size(); ++l) {
    const double phase = kTwoPi * direction.dot(array.elements[static_cast<std::size_t>(l)]);
    v(l) = Complex(std::cos(phase), std::sin(phase));
  }
  return v;
}

Eigen::MatrixXcd assemble_scatter_matrix(std::size_t receiver, std::size_t transmitter,
                                         const ModeSelection& selection,
                                         const ChannelScenario& scenario) {
  scenario.validate();
  if (receiver >= scenario.receivers.size() || transmitter >= scenario.transmitters.size()) {
    throw std::domain_error("receiver or transmitter index out of range");
  }
  if (selection.assignment.size() != scenario.layout.size()) {
    throw std::domain_error("selection must assign exactly one mode per tile");
  }
  for (std::size_t m : selection.assignment) {
    if (m >= scenario.codebook.size()) {
      throw std::domain_error("selection mode index out of range");
    }
  }

  const auto& in_paths = scenario.incident[transmitter];
  const auto& out_paths = scenario.outgoing[receiver];
  Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(out_paths.size()),
                                              static_cast<Eigen::Index>(in_paths.size()));
  const double k = scenario.layout.wave.wavenumber();
  for (std::size_t nr = 0; nr < out_paths.size(); ++nr) {
    for (std::size_t nt = 0; nt < in_paths.size(); ++nt) {
      const AngleTriple& t = in_paths[nt].arrival_irs;
      const AnglePair& r = out_paths[nr].departure_irs;
      // Tiles sharing a mode share the reference response; only the grid
      // translation phase differs per tile.
      std::map<std::size_t, Complex> ref;
      const TransverseSum s = direction_cosine_sum(t, r);
      Complex sum(0.0, 0.0);
      for (std::size_t n = 0; n < scenario.layout.size(); ++n) {
        const std::size_t m = selection.assignment[n];
        auto it = ref.find(m);
        if (it == ref.end()) {
          it = ref.emplace(m, reference_tile_response(t, r, scenario.codebook.modes[m],
                                                      scenario.layout)).first;
        }
        const TileSpec& tile = scenario.layout.tiles[n];
        const double phase = k * (tile.k_x * tile.len_x * s.x + tile.k_y * tile.len_y * s.y);
        sum += it->second * Complex(std::cos(phase), std::sin(phase));
      }
      G(static_cast<Eigen::Index>(nr), static_cast<Eigen::Index>(nt)) = sum;
    }
  }
  return G;
}

Eigen::MatrixXcd end_to_end_matrix(std::size_t receiver, std::size_t transmitter,
                                   const ModeSelection& selection,
                                   const ChannelScenario& scenario) {
  scenario.validate();
  if (receiver >= scenario.receivers.size() || transmitter >= scenario.transmitters.size()) {
    throw std::domain_error("receiver or transmitter index out of range");
  }
  const ArrayGeometry& rx = scenario.receivers[receiver];
  const ArrayGeometry& tx = scenario.transmitters[transmitter];
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rx.size()),
                                              static_cast<Eigen::Index>(tx.size()));

  for (const DirectPath& p : scenario.direct[receiver][transmitter]) {
    const Eigen::VectorXcd a = steering_vector(rx, propagation_direction(p.arrival));
    const Eigen::VectorXcd d = steering_vector(tx, propagation_direction(p.departure));
    H += p.gain * a * d.adjoint();
  }

  const auto& in_paths = scenario.incident[transmitter];
  const auto& out_paths = scenario.outgoing[receiver];
  if (!in_paths.empty() && !out_paths.empty() && scenario.layout.size() > 0) {
    Eigen::MatrixXcd A_r(static_cast<Eigen::Index>(rx.size()),
                         static_cast<Eigen::Index>(out_paths.size()));
    Eigen::VectorXcd gains_r(static_cast<Eigen::Index>(out_paths.size()));
    for (std::size_t nr = 0; nr < out_paths.size(); ++nr) {
      A_r.col(static_cast<Eigen::Index>(nr)) =
          steering_vector(rx, propagation_direction(out_paths[nr].arrival));
      gains_r(static_cast<Eigen::Index>(nr)) = out_paths[nr].gain;
    }
    Eigen::MatrixXcd D_t(static_cast<Eigen::Index>(tx.size()),
                         static_cast<Eigen::Index>(in_paths.size()));
    Eigen::VectorXcd gains_t(static_cast<Eigen::Index>(in_paths.size()));
    for (std::size_t nt = 0; nt < in_paths.size(); ++nt) {
      D_t.col(static_cast<Eigen::Index>(nt)) =
          steering_vector(tx, propagation_direction(in_paths[nt].departure));
      gains_t(static_cast<Eigen::Index>(nt)) = in_paths[nt].gain;
    }
    const Eigen::MatrixXcd G = assemble_scatter_matrix(receiver, transmitter, selection, scenario);
    H += A_r * gains_r.asDiagonal() * G * gains_t.asDiagonal() * D_t.adjoint();
  }
  return H;
}

std::vector<Eigen::VectorXcd> apply_channel(const ModeSelection& selection,
                                            const ChannelScenario& scenario,
                                            const std::vector<Eigen::VectorXcd>& transmit,
                                            std::uint64_t realization) {
  scenario.validate();
  if (transmit.size() != scenario.transmitters.size()) {
    throw std::domain_error("one transmit vector required per transmitter");
  }
  for (std::size_t i = 0; i < transmit.size(); ++i) {
    if (static_cast<std::size_t>(transmit[i].size()) != scenario.transmitters[i].size()) {
      throw std::domain_error("transmit vector length must match the array size");
    }
  }
  std::vector<Eigen::VectorXcd> received;
  received.reserve(scenario.receivers.size());
  const double sigma = std::sqrt(scenario.noise_variance);
  for (std::size_t j = 0; j < scenario.receivers.size(); ++j) {
    Eigen::VectorXcd y =
        Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(scenario.receivers[j].size()));
    for (std::size_t i = 0; i < transmit.size(); ++i) {
      y += end_to_end_matrix(j, i, selection, scenario) * transmit[i];
    }
    if (sigma > 0.0) {
      for (Eigen::Index l = 0; l < y.size(); ++l) {
        y(l) += sigma * keyed_unit_gaussian(scenario.rng_seed, j, realization,
                                            static_cast<std::uint64_t>(l));
      }
    }
    received.push_back(std::move(y));
  }
  return received;
}

double link_budget_ratio(double rho_d, double rho_t, double rho_r,
                         double irs_area, const WaveSpec& wave) {
  check_positive(rho_d, "rho_d");
  check_positive(rho_t, "rho_t");
  check_positive(rho_r, "rho_r");
  check_positive(irs_area, "irs_area");
  const double num = irs_area * rho_d;
  const double den = wave.lambda * rho_t * rho_r;
  return (num / den) * (num / den);
}

double required_irs_area(double rho_d, double rho_t, double rho_r,
                         const WaveSpec& wave) {
  check_positive(rho_d, "rho_d");
  check_positive(rho_t, "rho_t");
  check_positive(rho_r, "rho_r");
  return wave.lambda * rho_t * rho_r / rho_d;
}

double free_space_gain(double distance) {
  check_positive(distance, "distance");
  return 1.0 / (kSqrt4Pi * distance);
}

}  // namespace irs
