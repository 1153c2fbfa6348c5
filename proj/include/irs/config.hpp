// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irs/channel.hpp"
#include "irs/optimizer.hpp"

namespace irs::cli {

// Sectioned key-value scenario file:
//   # full-line comment
//   [section]
//   key = value
// Repeated keys are kept in order (list-valued keys); section names are
// unique. Values are raw strings; typing happens in the builders below.
struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct ConfigSection {
  std::string name;
  int line = 0;
  std::vector<ConfigEntry> entries;
};

struct ConfigDoc {
  std::string source;  // path or label used in diagnostics
  std::string text;    // raw bytes, hashed into the run manifest
  std::vector<ConfigSection> sections;

  const ConfigSection* find_section(std::string_view name) const;
};

// Throws ConfigError with "<source>:<line>: message" context.
ConfigDoc parse_config(std::string_view text, std::string source_name);
ConfigDoc load_config_file(const std::string& path);

// Canonical text form; parsing it back yields a semantically equal document.
std::string serialize_config(const ConfigDoc& doc);
bool semantically_equal(const ConfigDoc& a, const ConfigDoc& b);

enum class AngleUnit { kDegrees, kRadians };

// Angle-valued config fields are interpreted in this unit (degrees unless the
// CLI says --radians); normalized mode parameters are always raw numbers.
double to_radians(double value, AngleUnit unit);

// [irs] footprint plus optional unit-cell settings, before variant overrides.
struct TilePrototype {
  double len_x = 0.0;
  double len_y = 0.0;
  double rho_eff = 1.0;
  std::optional<int> cells_x;
  std::optional<int> cells_y;
  std::optional<double> cell_edge;  // meters; default: the cell spacing
  std::optional<int> phase_bits;
};

enum class SweepVariable { kThetaR, kThetaT, kBetaBarX };

struct SweepVariant {
  enum class Kind { kContinuous, kDiscreteIdeal, kDiscreteQuantized, kGap };
  Kind kind = Kind::kContinuous;
  int bits = 0;          // kDiscreteQuantized
  double gap_ratio = 1;  // kGap
  std::string label;
};

// Fully resolved [sweep] section (angles in radians).
struct SweepSpec {
  SweepVariable variable = SweepVariable::kThetaR;
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;
  double theta_t = 0.0;
  double phi_t = 0.0;
  double phi_pol = 0.0;
  double theta_r = 0.0;
  double phi_r = 0.0;
  TransmissionMode mode{0.0, 0.0, 0.0};
  std::vector<SweepVariant> variants;

  int points() const;
  double value_at(int i) const;
};

WaveSpec build_wave(const ConfigDoc& doc);
TilePrototype build_tile_prototype(const ConfigDoc& doc);

// [irs] + [tiles] -> surface; uses the prototype's lattice settings when cell
// counts are configured.
IrsLayout build_layout(const ConfigDoc& doc);

Codebook build_codebook(const ConfigDoc& doc);
SweepSpec build_sweep(const ConfigDoc& doc, AngleUnit unit);

// Whole-scenario assembly from [wave], [irs], [tiles], [codebook],
// [transmitters], [receivers], [paths].
ChannelScenario build_scenario(const ConfigDoc& doc, AngleUnit unit,
                               std::optional<std::uint64_t> seed_override);

// [tiles] selection key (defaults to all-zero).
ModeSelection build_selection(const ConfigDoc& doc, const ChannelScenario& scenario);

Objective build_objective(const ConfigDoc& doc, const ChannelScenario& scenario);

// [paths] realization counter for the noise stream (default 0).
std::uint64_t build_realization(const ConfigDoc& doc);

struct OptimizeOptions {
  bool run_exhaustive = true;
  bool run_greedy = true;
  std::uint64_t budget = 1'000'000;
  int passes = 8;
  // greedy_init = first_mode (default) starts every tile on mode 0;
  // greedy_init = random draws a seeded restart point (init_seed, default:
  // the scenario seed).
  bool random_init = false;
  std::optional<std::uint64_t> init_seed;
};
OptimizeOptions build_optimize_options(const ConfigDoc& doc);

}  // namespace irs::cli
