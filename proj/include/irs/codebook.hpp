// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "irs/tile_response.hpp"

namespace irs {

// Ordered, non-empty set of transmission modes shared by every tile of a
// surface. Mode indices are 0-based throughout (code, configs, CSV output).
struct Codebook {
  std::vector<TransmissionMode> modes;

  explicit Codebook(std::vector<TransmissionMode> m);
  std::size_t size() const { return modes.size(); }
};

// Uniform grid over the (beta_bar_x, beta_bar_y) rectangle, optionally
// crossed with a set of beta_bar_0 levels (default {0}: the common phase does
// not move power). steps == 1 places the single point at the lower bound.
// Mode order: x-major, then y, then beta_bar_0 level.
Codebook build_grid_codebook(double lo_x, double hi_x, int steps_x,
                             double lo_y, double hi_y, int steps_y,
                             const std::vector<double>& beta0_levels = {0.0});

// Reflecting surface: tiles on a common grid (identical footprints, distinct
// grid positions), the carrier, and an optional unit-cell lattice. When the
// lattice is set every response is evaluated through the discrete model;
// otherwise through the continuous closed form. An empty tile list is a valid
// surface (direct-path-only scenarios).
struct IrsLayout {
  std::vector<TileSpec> tiles;
  WaveSpec wave;
  std::optional<DiscreteLattice> lattice;

  IrsLayout(std::vector<TileSpec> t, WaveSpec w,
            std::optional<DiscreteLattice> lat = std::nullopt);
  std::size_t size() const { return tiles.size(); }
};

// Response of the origin-centered reference tile under one mode, routed
// through the layout's continuous or discrete model.
Complex reference_tile_response(const AngleTriple& t, const AnglePair& r,
                                const TransmissionMode& mode,
                                const IrsLayout& layout);

// Response of tile tile_index driving codebook mode mode_index: the reference
// response times the grid translation phase
//   exp(j*k*(k_x*len_x*A_x(t, r) + k_y*len_y*A_y(t, r))).
Complex tile_translated_response(std::size_t tile_index, std::size_t mode_index,
                                 const AngleTriple& t, const AnglePair& r,
                                 const IrsLayout& layout,
                                 const Codebook& codebook);

}  // namespace irs
