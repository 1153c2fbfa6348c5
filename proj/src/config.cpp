// SPDX-License-Identifier: Apache-2.0
#include "irs/config.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

namespace irs::cli {

namespace {

std::string trim(std::string_view s) {
  const char* ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// ';'-separated tuples, each trimmed; empty parts are rejected by callers.
std::vector<std::string> split_semi(const std::string& s) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (begin <= s.size()) {
    const std::size_t end = s.find(';', begin);
    if (end == std::string::npos) {
      out.push_back(trim(std::string_view(s).substr(begin)));
      break;
    }
    out.push_back(trim(std::string_view(s).substr(begin, end - begin)));
    begin = end + 1;
  }
  return out;
}

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::optional<long long> parse_integer(const std::string& s) {
  const auto v = parse_number(s);
  if (!v || *v != std::floor(*v) || std::abs(*v) > 9.0e15) return std::nullopt;
  return static_cast<long long>(*v);
}

// Typed access to one section with file:line diagnostics.
class Section {
 public:
  Section(const ConfigDoc& doc, std::string name)
      : doc_(&doc), name_(std::move(name)), sec_(doc.find_section(name_)) {}

  bool exists() const { return sec_ != nullptr; }

  void require_exists() const {
    if (!sec_) {
      throw ConfigError(doc_->source + ": missing required section [" + name_ + "]");
    }
  }

  const ConfigEntry* find(std::string_view key) const {
    if (!sec_) return nullptr;
    const ConfigEntry* hit = nullptr;
    for (const auto& e : sec_->entries) {
      if (e.key == key) hit = &e;  // last occurrence wins for scalar keys
    }
    return hit;
  }

  std::vector<const ConfigEntry*> all(std::string_view key) const {
    std::vector<const ConfigEntry*> out;
    if (!sec_) return out;
    for (const auto& e : sec_->entries) {
      if (e.key == key) out.push_back(&e);
    }
    return out;
  }

  std::optional<std::string> get_string(std::string_view key) const {
    const ConfigEntry* e = find(key);
    if (!e) return std::nullopt;
    return e->value;
  }

  std::string string_or(std::string_view key, std::string def) const {
    auto v = get_string(key);
    return v ? *v : std::move(def);
  }

  std::optional<double> get_number(std::string_view key) const {
    const ConfigEntry* e = find(key);
    if (!e) return std::nullopt;
    const auto v = parse_number(e->value);
    if (!v) fail(*e, "expected a number, got '" + e->value + "'");
    return v;
  }

  double require_number(std::string_view key) const {
    const auto v = get_number(key);
    if (!v) fail_missing(key);
    return *v;
  }

  double number_or(std::string_view key, double def) const {
    const auto v = get_number(key);
    return v ? *v : def;
  }

  std::optional<long long> get_integer(std::string_view key) const {
    const ConfigEntry* e = find(key);
    if (!e) return std::nullopt;
    const auto v = parse_integer(e->value);
    if (!v) fail(*e, "expected an integer, got '" + e->value + "'");
    return v;
  }

  long long integer_or(std::string_view key, long long def) const {
    const auto v = get_integer(key);
    return v ? *v : def;
  }

  [[noreturn]] void fail(const ConfigEntry& e, const std::string& msg) const {
    throw ConfigError(doc_->source + ":" + std::to_string(e.line) + ": [" + name_ + "] " +
                      e.key + ": " + msg);
  }

  [[noreturn]] void fail_missing(std::string_view key) const {
    throw ConfigError(doc_->source + ": [" + name_ + "] missing required key '" +
                      std::string(key) + "'");
  }

  const std::string& name() const { return name_; }

 private:
  const ConfigDoc* doc_;
  std::string name_;
  const ConfigSection* sec_;
};

std::vector<double> parse_numbers_or_fail(const Section& sec, const ConfigEntry& e,
                                          std::size_t count, const char* shape) {
  const auto toks = split_ws(e.value);
  std::vector<double> out;
  for (const auto& t : toks) {
    const auto v = parse_number(t);
    if (!v) sec.fail(e, "expected numbers (" + std::string(shape) + "), got '" + t + "'");
    out.push_back(*v);
  }
  if (count != 0 && out.size() != count) {
    sec.fail(e, "expected " + std::to_string(count) + " numbers (" + shape + "), got " +
                    std::to_string(out.size()));
  }
  return out;
}

}  // namespace

const ConfigSection* ConfigDoc::find_section(std::string_view name) const {
  for (const auto& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

ConfigDoc parse_config(std::string_view text, std::string source_name) {
  ConfigDoc doc;
  doc.source = std::move(source_name);
  doc.text = std::string(text);

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ConfigError(doc.source + ":" + std::to_string(line_no) +
                          ": malformed section header '" + line + "'");
      }
      const std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
      if (name.empty()) {
        throw ConfigError(doc.source + ":" + std::to_string(line_no) + ": empty section name");
      }
      if (doc.find_section(name)) {
        throw ConfigError(doc.source + ":" + std::to_string(line_no) + ": duplicate section [" +
                          name + "]");
      }
      doc.sections.push_back(ConfigSection{name, line_no, {}});
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(doc.source + ":" + std::to_string(line_no) +
                        ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(doc.source + ":" + std::to_string(line_no) + ": empty key");
    }
    if (doc.sections.empty()) {
      throw ConfigError(doc.source + ":" + std::to_string(line_no) +
                        ": key '" + key + "' appears before any [section]");
    }
    doc.sections.back().entries.push_back(ConfigEntry{key, value, line_no});
  }
  return doc;
}

ConfigDoc load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

std::string serialize_config(const ConfigDoc& doc) {
  std::string out;
  for (const auto& s : doc.sections) {
    if (!out.empty()) out += "\n";
    out += "[" + s.name + "]\n";
    for (const auto& e : s.entries) {
      out += e.key + " = " + e.value + "\n";
    }
  }
  return out;
}

bool semantically_equal(const ConfigDoc& a, const ConfigDoc& b) {
  if (a.sections.size() != b.sections.size()) return false;
  for (std::size_t i = 0; i < a.sections.size(); ++i) {
    const auto& sa = a.sections[i];
    const auto& sb = b.sections[i];
    if (sa.name != sb.name || sa.entries.size() != sb.entries.size()) return false;
    for (std::size_t k = 0; k < sa.entries.size(); ++k) {
      if (sa.entries[k].key != sb.entries[k].key ||
          sa.entries[k].value != sb.entries[k].value) {
        return false;
      }
    }
  }
  return true;
}

double to_radians(double value, AngleUnit unit) {
  return unit == AngleUnit::kDegrees ? deg_to_rad(value) : value;
}

WaveSpec build_wave(const ConfigDoc& doc) {
  Section wave(doc, "wave");
  wave.require_exists();
  const ConfigEntry* lam = wave.find("lambda");
  const ConfigEntry* freq = wave.find("frequency_hz");
  if (lam && freq) {
    wave.fail(*freq, "give either lambda or frequency_hz, not both");
  }
  try {
    if (lam) return WaveSpec(wave.require_number("lambda"));
    if (freq) return WaveSpec::from_frequency(wave.require_number("frequency_hz"));
  } catch (const std::domain_error& err) {
    wave.fail(lam ? *lam : *freq, err.what());
  }
  wave.fail_missing("lambda");
}

TilePrototype build_tile_prototype(const ConfigDoc& doc) {
  Section irs_sec(doc, "irs");
  irs_sec.require_exists();
  TilePrototype p;
  p.len_x = irs_sec.require_number("len_x");
  p.len_y = irs_sec.require_number("len_y");
  p.rho_eff = irs_sec.number_or("rho_eff", 1.0);

  const auto cx = irs_sec.get_integer("cells_x");
  const auto cy = irs_sec.get_integer("cells_y");
  if (cx.has_value() != cy.has_value()) {
    irs_sec.fail(*irs_sec.find(cx ? "cells_x" : "cells_y"),
                 "cells_x and cells_y must be given together");
  }
  if (cx) {
    p.cells_x = static_cast<int>(*cx);
    p.cells_y = static_cast<int>(*cy);
  }
  if (const auto edge = irs_sec.get_number("cell_edge")) {
    if (!cx) irs_sec.fail(*irs_sec.find("cell_edge"), "cell_edge requires cells_x/cells_y");
    p.cell_edge = *edge;
  }
  if (const auto bits = irs_sec.get_integer("phase_bits")) {
    if (!cx) irs_sec.fail(*irs_sec.find("phase_bits"), "phase_bits requires cells_x/cells_y");
    p.phase_bits = static_cast<int>(*bits);
  }
  return p;
}

namespace {

std::optional<DiscreteLattice> lattice_from_prototype(const ConfigDoc& doc,
                                                      const TilePrototype& p) {
  if (!p.cells_x) return std::nullopt;
  Section irs_sec(doc, "irs");
  try {
    const double dx = p.len_x / *p.cells_x;
    const double dy = p.len_y / *p.cells_y;
    const double edge = p.cell_edge.value_or(std::min(dx, dy));
    return DiscreteLattice(*p.cells_x, *p.cells_y, dx, dy, edge, p.phase_bits);
  } catch (const std::domain_error& err) {
    throw ConfigError(doc.source + ": [irs] " + err.what());
  }
}

}  // namespace

IrsLayout build_layout(const ConfigDoc& doc) {
  const WaveSpec wave = build_wave(doc);
  const TilePrototype proto = build_tile_prototype(doc);

  std::vector<std::pair<int, int>> positions;
  Section tiles_sec(doc, "tiles");
  if (tiles_sec.exists()) {
    for (const ConfigEntry* e : tiles_sec.all("tile")) {
      const auto nums = parse_numbers_or_fail(tiles_sec, *e, 2, "k_x k_y");
      if (nums[0] != std::floor(nums[0]) || nums[1] != std::floor(nums[1])) {
        tiles_sec.fail(*e, "grid positions must be integers");
      }
      positions.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    }
  }
  if (positions.empty()) positions.emplace_back(0, 0);

  std::vector<TileSpec> tiles;
  tiles.reserve(positions.size());
  try {
    for (const auto& [kx, ky] : positions) {
      tiles.emplace_back(proto.len_x, proto.len_y, proto.rho_eff, kx, ky);
    }
    return IrsLayout(std::move(tiles), wave, lattice_from_prototype(doc, proto));
  } catch (const std::domain_error& err) {
    throw ConfigError(doc.source + ": [irs]/[tiles] " + err.what());
  }
}

Codebook build_codebook(const ConfigDoc& doc) {
  Section cb(doc, "codebook");
  cb.require_exists();
  const auto mode_entries = cb.all("mode");
  const bool has_grid = cb.find("grid_x") || cb.find("grid_y");
  if (!mode_entries.empty() && has_grid) {
    cb.fail(*cb.find(cb.find("grid_x") ? "grid_x" : "grid_y"),
            "give explicit modes or a grid, not both");
  }
  try {
    if (!mode_entries.empty()) {
      std::vector<TransmissionMode> modes;
      modes.reserve(mode_entries.size());
      for (const ConfigEntry* e : mode_entries) {
        const auto nums =
            parse_numbers_or_fail(cb, *e, 3, "beta_bar_x beta_bar_y beta_bar_0");
        modes.emplace_back(nums[0], nums[1], nums[2]);
      }
      return Codebook(std::move(modes));
    }
    if (has_grid) {
      auto parse_grid = [&](const char* key) -> std::array<double, 3> {
        const ConfigEntry* e = cb.find(key);
        if (!e) return {0.0, 0.0, 1.0};
        const auto nums = parse_numbers_or_fail(cb, *e, 3, "lo hi steps");
        if (nums[2] != std::floor(nums[2]) || nums[2] < 1) {
          cb.fail(*e, "steps must be a positive integer");
        }
        return {nums[0], nums[1], nums[2]};
      };
      const auto gx = parse_grid("grid_x");
      const auto gy = parse_grid("grid_y");
      std::vector<double> beta0_levels{0.0};
      if (const ConfigEntry* e = cb.find("beta0_levels")) {
        beta0_levels = parse_numbers_or_fail(cb, *e, 0, "beta_bar_0 levels");
      }
      return build_grid_codebook(gx[0], gx[1], static_cast<int>(gx[2]), gy[0], gy[1],
                                 static_cast<int>(gy[2]), beta0_levels);
    }
  } catch (const std::domain_error& err) {
    throw ConfigError(doc.source + ": [codebook] " + err.what());
  }
  cb.fail_missing("mode");
}

int SweepSpec::points() const {
  return static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
}

double SweepSpec::value_at(int i) const { return start + i * step; }

SweepSpec build_sweep(const ConfigDoc& doc, AngleUnit unit) {
  Section sw(doc, "sweep");
  sw.require_exists();
  SweepSpec spec;

  const std::string var = sw.string_or("variable", "theta_r");
  if (var == "theta_r") {
    spec.variable = SweepVariable::kThetaR;
  } else if (var == "theta_t") {
    spec.variable = SweepVariable::kThetaT;
  } else if (var == "beta_bar_x") {
    spec.variable = SweepVariable::kBetaBarX;
  } else {
    sw.fail(*sw.find("variable"),
            "unknown sweep variable '" + var + "' (theta_r, theta_t, beta_bar_x)");
  }
  const bool angular = spec.variable != SweepVariable::kBetaBarX;

  spec.start = sw.require_number("start");
  spec.stop = sw.require_number("stop");
  spec.step = sw.require_number("step");
  if (angular) {
    spec.start = to_radians(spec.start, unit);
    spec.stop = to_radians(spec.stop, unit);
    spec.step = to_radians(spec.step, unit);
  }
  if (!(spec.step > 0.0)) sw.fail(*sw.find("step"), "step must be positive");
  if (spec.stop < spec.start) sw.fail(*sw.find("stop"), "stop must be >= start");
  if (spec.points() > 10'000'000) sw.fail(*sw.find("step"), "sweep exceeds 10^7 points");

  spec.theta_t = to_radians(sw.number_or("theta_t", 0.0), unit);
  spec.phi_t = to_radians(sw.number_or("phi_t", 0.0), unit);
  spec.phi_pol = to_radians(sw.number_or("phi_pol", 0.0), unit);
  spec.theta_r = to_radians(sw.number_or("theta_r", 0.0), unit);
  spec.phi_r = to_radians(sw.number_or("phi_r", 0.0), unit);

  try {
    // Fixed angles must be valid regardless of the swept variable.
    const AngleTriple fixed_in(spec.theta_t, spec.phi_t, spec.phi_pol);
    const AnglePair fixed_out(spec.theta_r, spec.phi_r);

    if (sw.find("target_theta_r") || sw.find("target_phi_r")) {
      const AnglePair target(to_radians(sw.require_number("target_theta_r"), unit),
                             to_radians(sw.number_or("target_phi_r", 0.0), unit));
      spec.mode = mode_from_directions(fixed_in, target,
                                       kTwoPi * sw.number_or("beta_bar_0", 0.0));
    } else {
      spec.mode = TransmissionMode(sw.number_or("beta_bar_x", 0.0),
                                   sw.number_or("beta_bar_y", 0.0),
                                   sw.number_or("beta_bar_0", 0.0));
    }

    // Endpoint validation of the swept quantity. The configured stop is the
    // boundary; accumulated grid points may overshoot it by an ulp and are
    // clamped at evaluation time instead.
    switch (spec.variable) {
      case SweepVariable::kThetaR:
        AnglePair(spec.start, spec.phi_r);
        AnglePair(spec.stop, spec.phi_r);
        break;
      case SweepVariable::kThetaT:
        AngleTriple(spec.start, spec.phi_t, spec.phi_pol);
        AngleTriple(spec.stop, spec.phi_t, spec.phi_pol);
        break;
      case SweepVariable::kBetaBarX:
        TransmissionMode(spec.start, 0.0, 0.0);
        TransmissionMode(spec.stop, 0.0, 0.0);
        break;
    }
  } catch (const std::domain_error& err) {
    throw ConfigError(doc.source + ": [sweep] " + err.what());
  }

  const auto tokens = split_ws(sw.string_or("variants", "continuous"));
  for (const auto& tok : tokens) {
    SweepVariant v;
    v.label = tok;
    for (auto& ch : v.label) {
      if (ch == ':') ch = '_';
    }
    if (tok == "continuous") {
      v.kind = SweepVariant::Kind::kContinuous;
    } else if (tok == "discrete") {
      v.kind = SweepVariant::Kind::kDiscreteIdeal;
    } else if (tok.rfind("discrete:", 0) == 0) {
      v.kind = SweepVariant::Kind::kDiscreteQuantized;
      const auto bits = parse_integer(tok.substr(9));
      if (!bits || *bits < 1 || *bits > 62) {
        sw.fail(*sw.find("variants"), "bad quantizer depth in '" + tok + "'");
      }
      v.bits = static_cast<int>(*bits);
      v.label = "discrete_" + std::to_string(v.bits) + "bit";
    } else if (tok.rfind("gap:", 0) == 0) {
      v.kind = SweepVariant::Kind::kGap;
      const auto ratio = parse_number(tok.substr(4));
      if (!ratio || !(*ratio > 0.0) || *ratio > 1.0) {
        sw.fail(*sw.find("variants"), "gap ratio must lie in (0, 1] in '" + tok + "'");
      }
      v.gap_ratio = *ratio;
    } else {
      sw.fail(*sw.find("variants"),
              "unknown variant '" + tok + "' (continuous, discrete, discrete:<bits>, gap:<ratio>)");
    }
    spec.variants.push_back(std::move(v));
  }
  return spec;
}

namespace {

std::vector<ArrayGeometry> build_arrays(const ConfigDoc& doc, const char* section_name) {
  Section sec(doc, section_name);
  sec.require_exists();
  const auto entries = sec.all("array");
  if (entries.empty()) sec.fail_missing("array");
  std::vector<ArrayGeometry> arrays;
  arrays.reserve(entries.size());
  for (const ConfigEntry* e : entries) {
    std::vector<Vec3> elements;
    for (const std::string& part : split_semi(e->value)) {
      if (part.empty()) sec.fail(*e, "empty element in ';'-separated list");
      const auto toks = split_ws(part);
      if (toks.size() != 3) {
        sec.fail(*e, "each element needs 'x y z' (wavelength units), got '" + part + "'");
      }
      Vec3 p;
      const auto x = parse_number(toks[0]);
      const auto y = parse_number(toks[1]);
      const auto z = parse_number(toks[2]);
      if (!x || !y || !z) sec.fail(*e, "element coordinates must be numbers");
      p.x = *x;
      p.y = *y;
      p.z = *z;
      elements.push_back(p);
    }
    try {
      arrays.emplace_back(std::move(elements));
    } catch (const std::domain_error& err) {
      sec.fail(*e, err.what());
    }
  }
  return arrays;
}

std::size_t terminal_index(const Section& sec, const ConfigEntry& e, double raw,
                           std::size_t count, const char* what) {
  if (raw != std::floor(raw) || raw < 0 || raw >= static_cast<double>(count)) {
    sec.fail(e, std::string(what) + " index " + std::to_string(raw) + " out of range [0, " +
                    std::to_string(count) + ")");
  }
  return static_cast<std::size_t>(raw);
}

}  // namespace

ChannelScenario build_scenario(const ConfigDoc& doc, AngleUnit unit,
                               std::optional<std::uint64_t> seed_override) {
  ChannelScenario sc{build_arrays(doc, "transmitters"),
                     build_arrays(doc, "receivers"),
                     build_layout(doc),
                     build_codebook(doc),
                     {},
                     {},
                     {},
                     0.0,
                     0};
  const std::size_t num_tx = sc.transmitters.size();
  const std::size_t num_rx = sc.receivers.size();
  sc.direct.assign(num_rx, std::vector<std::vector<DirectPath>>(num_tx));
  sc.incident.assign(num_tx, {});
  sc.outgoing.assign(num_rx, {});

  Section paths(doc, "paths");
  paths.require_exists();
  auto rad = [&](double v) { return to_radians(v, unit); };
  try {
    for (const ConfigEntry* e : paths.all("direct")) {
      const auto n = parse_numbers_or_fail(
          paths, *e, 8, "j i theta_dep phi_dep theta_arr phi_arr re im");
      const std::size_t j = terminal_index(paths, *e, n[0], num_rx, "receiver");
      const std::size_t i = terminal_index(paths, *e, n[1], num_tx, "transmitter");
      sc.direct[j][i].push_back(DirectPath{AnglePair(rad(n[2]), rad(n[3])),
                                           AnglePair(rad(n[4]), rad(n[5])),
                                           Complex(n[6], n[7])});
    }
    for (const ConfigEntry* e : paths.all("incident")) {
      const auto n = parse_numbers_or_fail(
          paths, *e, 8, "i theta_dep phi_dep theta_irs phi_irs phi_pol re im");
      const std::size_t i = terminal_index(paths, *e, n[0], num_tx, "transmitter");
      sc.incident[i].push_back(IncidentPath{AnglePair(rad(n[1]), rad(n[2])),
                                            AngleTriple(rad(n[3]), rad(n[4]), rad(n[5])),
                                            Complex(n[6], n[7])});
    }
    for (const ConfigEntry* e : paths.all("outgoing")) {
      const auto n = parse_numbers_or_fail(
          paths, *e, 7, "j theta_irs phi_irs theta_arr phi_arr re im");
      const std::size_t j = terminal_index(paths, *e, n[0], num_rx, "receiver");
      sc.outgoing[j].push_back(OutgoingPath{AnglePair(rad(n[1]), rad(n[2])),
                                            AnglePair(rad(n[3]), rad(n[4])),
                                            Complex(n[5], n[6])});
    }
  } catch (const std::domain_error& err) {
    throw ConfigError(doc.source + ": [paths] " + err.what());
  }

  sc.noise_variance = paths.number_or("noise_variance", 0.0);
  const long long seed = paths.integer_or("seed", 0);
  if (seed < 0) paths.fail(*paths.find("seed"), "seed must be non-negative");
  sc.rng_seed = seed_override.value_or(static_cast<std::uint64_t>(seed));
  sc.validate();
  return sc;
}

ModeSelection build_selection(const ConfigDoc& doc, const ChannelScenario& scenario) {
  ModeSelection sel;
  sel.assignment.assign(scenario.layout.size(), 0);
  Section tiles_sec(doc, "tiles");
  const ConfigEntry* e = tiles_sec.exists() ? tiles_sec.find("selection") : nullptr;
  if (!e) return sel;
  const auto nums = parse_numbers_or_fail(tiles_sec, *e, scenario.layout.size(),
                                          "one mode index per tile");
  for (std::size_t n = 0; n < nums.size(); ++n) {
    if (nums[n] != std::floor(nums[n]) || nums[n] < 0 ||
        nums[n] >= static_cast<double>(scenario.codebook.size())) {
      tiles_sec.fail(*e, "mode index " + std::to_string(nums[n]) + " out of range [0, " +
                             std::to_string(scenario.codebook.size()) + ")");
    }
    sel.assignment[n] = static_cast<std::size_t>(nums[n]);
  }
  return sel;
}

Objective build_objective(const ConfigDoc& doc, const ChannelScenario& scenario) {
  Objective obj;
  Section os(doc, "objective");
  if (!os.exists()) return obj;

  const std::string kind = os.string_or("kind", "sum_power");
  if (kind == "sum_power") {
    obj.kind = ObjectiveKind::kSumReceivedPower;
  } else if (kind == "min_power") {
    obj.kind = ObjectiveKind::kMinLinkPower;
  } else {
    os.fail(*os.find("kind"), "unknown objective '" + kind + "' (sum_power, min_power)");
  }

  const std::string exc = os.string_or("excitation", "isotropic");
  if (exc == "isotropic") {
    obj.isotropic = true;
  } else if (exc == "fixed") {
    obj.isotropic = false;
  } else {
    os.fail(*os.find("excitation"), "unknown excitation '" + exc + "' (isotropic, fixed)");
  }

  if (!obj.isotropic) {
    const auto entries = os.all("transmit");
    if (entries.size() != scenario.transmitters.size()) {
      throw ConfigError(doc.source + ": [objective] fixed excitation needs one transmit line per transmitter (" +
                        std::to_string(scenario.transmitters.size()) + "), got " +
                        std::to_string(entries.size()));
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto parts = split_semi(entries[i]->value);
      if (parts.size() != scenario.transmitters[i].size()) {
        os.fail(*entries[i], "expected " + std::to_string(scenario.transmitters[i].size()) +
                                 " 're im' elements");
      }
      Eigen::VectorXcd x(static_cast<Eigen::Index>(parts.size()));
      for (std::size_t l = 0; l < parts.size(); ++l) {
        const auto toks = split_ws(parts[l]);
        const auto re = toks.size() == 2 ? parse_number(toks[0]) : std::nullopt;
        const auto im = toks.size() == 2 ? parse_number(toks[1]) : std::nullopt;
        if (!re || !im) os.fail(*entries[i], "each element needs 're im', got '" + parts[l] + "'");
        x(static_cast<Eigen::Index>(l)) = Complex(*re, *im);
      }
      obj.transmit.push_back(std::move(x));
    }
  }
  return obj;
}

std::uint64_t build_realization(const ConfigDoc& doc) {
  Section paths(doc, "paths");
  if (!paths.exists()) return 0;
  const long long r = paths.integer_or("realization", 0);
  if (r < 0) paths.fail(*paths.find("realization"), "realization must be non-negative");
  return static_cast<std::uint64_t>(r);
}

OptimizeOptions build_optimize_options(const ConfigDoc& doc) {
  OptimizeOptions opts;
  Section os(doc, "objective");
  if (!os.exists()) return opts;
  const std::string algo = os.string_or("algorithm", "both");
  if (algo == "exhaustive") {
    opts.run_greedy = false;
  } else if (algo == "greedy") {
    opts.run_exhaustive = false;
  } else if (algo != "both") {
    os.fail(*os.find("algorithm"),
            "unknown algorithm '" + algo + "' (exhaustive, greedy, both)");
  }
  const long long budget = os.integer_or("budget", 1'000'000);
  if (budget < 1) os.fail(*os.find("budget"), "budget must be >= 1");
  opts.budget = static_cast<std::uint64_t>(budget);
  const long long passes = os.integer_or("passes", 8);
  if (passes < 1) os.fail(*os.find("passes"), "passes must be >= 1");
  opts.passes = static_cast<int>(passes);

  const std::string init = os.string_or("greedy_init", "first_mode");
  if (init == "random") {
    opts.random_init = true;
  } else if (init != "first_mode") {
    os.fail(*os.find("greedy_init"),
            "unknown greedy_init '" + init + "' (first_mode, random)");
  }
  if (const auto s = os.get_integer("init_seed")) {
    if (*s < 0) os.fail(*os.find("init_seed"), "init_seed must be non-negative");
    opts.init_seed = static_cast<std::uint64_t>(*s);
  }
  return opts;
}

}  // namespace irs::cli
