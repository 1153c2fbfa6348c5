// SPDX-License-Identifier: Apache-2.0
#include "irs/codebook.hpp"

#include <cmath>
#include <set>
#include <string>
#include <tuple>
#include <utility>

namespace irs {

namespace {

void check_step_bounds(double lo, double hi, int steps, const char* axis) {
  if (!(lo <= hi) || lo < -1.0 || hi > 1.0) {
    throw std::domain_error(std::string("codebook ") + axis +
                            " bounds must satisfy -1 <= lo <= hi <= 1");
  }
  if (steps < 1) {
    throw std::domain_error(std::string("codebook ") + axis + " steps must be >= 1");
  }
}

}  // namespace

Codebook::Codebook(std::vector<TransmissionMode> m) : modes(std::move(m)) {
  if (modes.empty()) {
    throw std::domain_error("codebook must contain at least one mode");
  }
  std::set<std::tuple<double, double, double>> seen;
  for (const auto& mode : modes) {
    if (!seen.insert({mode.beta_bar_x, mode.beta_bar_y, mode.beta_bar_0}).second) {
      throw std::domain_error("codebook modes must be distinct");
    }
  }
}

Codebook build_grid_codebook(double lo_x, double hi_x, int steps_x,
                             double lo_y, double hi_y, int steps_y,
                             const std::vector<double>& beta0_levels) {
  check_step_bounds(lo_x, hi_x, steps_x, "x");
  check_step_bounds(lo_y, hi_y, steps_y, "y");
  if (beta0_levels.empty()) {
    throw std::domain_error("beta0_levels must be non-empty");
  }
  auto grid_value = [](double lo, double hi, int steps, int i) {
    return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  };
  std::vector<TransmissionMode> modes;
  modes.reserve(static_cast<std::size_t>(steps_x) * steps_y * beta0_levels.size());
  for (int ix = 0; ix < steps_x; ++ix) {
    for (int iy = 0; iy < steps_y; ++iy) {
      for (double b0 : beta0_levels) {
        modes.emplace_back(grid_value(lo_x, hi_x, steps_x, ix),
                           grid_value(lo_y, hi_y, steps_y, iy), b0);
      }
    }
  }
  return Codebook(std::move(modes));
}

IrsLayout::IrsLayout(std::vector<TileSpec> t, WaveSpec w,
                     std::optional<DiscreteLattice> lat)
    : tiles(std::move(t)), wave(w), lattice(std::move(lat)) {
  std::set<std::pair<int, int>> positions;
  for (const auto& tile : tiles) {
    if (tile.len_x != tiles.front().len_x || tile.len_y != tiles.front().len_y) {
      throw std::domain_error("all tiles of a surface must share one footprint");
    }
    if (!positions.insert({tile.k_x, tile.k_y}).second) {
      throw std::domain_error("tile grid positions must be distinct");
    }
  }
  if (lattice && !tiles.empty()) {
    // Reuse the footprint validation of the discrete model once, up front.
    const double tol = 1e-9;
    if (std::abs(lattice->q_x * lattice->d_x - tiles.front().len_x) >
            tol * std::max(1.0, tiles.front().len_x) ||
        std::abs(lattice->q_y * lattice->d_y - tiles.front().len_y) >
            tol * std::max(1.0, tiles.front().len_y)) {
      throw std::domain_error("lattice does not tile the tile footprint: q_i * d_i must equal len_i");
    }
  }
}

Complex reference_tile_response(const AngleTriple& t, const AnglePair& r,
                                const TransmissionMode& mode,
                                const IrsLayout& layout) {
  if (layout.tiles.empty()) {
    throw std::domain_error("surface has no tiles");
  }
  const TileSpec& tile = layout.tiles.front();
  // The reference response ignores the tile's grid position by construction.
  const TileSpec origin_tile(tile.len_x, tile.len_y, tile.rho_eff, 0, 0);
  if (layout.lattice) {
    return discrete_tile_response(t, r, mode, origin_tile, *layout.lattice, layout.wave);
  }
  return continuous_tile_response(t, r, mode, origin_tile, layout.wave);
}

Complex tile_translated_response(std::size_t tile_index, std::size_t mode_index,
                                 const AngleTriple& t, const AnglePair& r,
                                 const IrsLayout& layout,
                                 const Codebook& codebook) {
  if (tile_index >= layout.tiles.size()) {
    throw std::domain_error("tile_index out of range");
  }
  if (mode_index >= codebook.size()) {
    throw std::domain_error("mode_index out of range");
  }
  const TileSpec& tile = layout.tiles[tile_index];
  const Complex ref = reference_tile_response(t, r, codebook.modes[mode_index], layout);
  const TransverseSum s = direction_cosine_sum(t, r);
  const double k = layout.wave.wavenumber();
  const double phase = k * (tile.k_x * tile.len_x * s.x + tile.k_y * tile.len_y * s.y);
  return ref * Complex(std::cos(phase), std::sin(phase));
}

}  // namespace irs
