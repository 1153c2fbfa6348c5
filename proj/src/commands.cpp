// SPDX-License-Identifier: Apache-2.0
#include "irs/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "irs/csv.hpp"
#include "irs/optimizer.hpp"

namespace irs::cli {

namespace {

// Amplitude in dB relative to the wavelength, floored at -400 dB so output
// stays finite at pattern nulls.
double amplitude_db(double abs_g, double lambda) {
  return 20.0 * std::log10(std::max(abs_g / lambda, 1e-20));
}

std::ofstream open_output(const std::string& path, std::ostream& diag, bool& ok) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    diag << "error: cannot write output file: " << path << "\n";
    ok = false;
  } else {
    ok = true;
  }
  return out;
}

// Unit-cell grid for one sweep variant; the prototype supplies counts, the
// variant decides fill factor and quantization.
DiscreteLattice variant_lattice(const TilePrototype& proto, const SweepVariant& variant,
                                const std::string& source) {
  if (!proto.cells_x || !proto.cells_y) {
    throw ConfigError(source + ": [irs] cells_x/cells_y required for variant '" +
                      variant.label + "'");
  }
  const double dx = proto.len_x / *proto.cells_x;
  const double dy = proto.len_y / *proto.cells_y;
  const double full = std::min(dx, dy);
  switch (variant.kind) {
    case SweepVariant::Kind::kDiscreteIdeal:
      return DiscreteLattice(*proto.cells_x, *proto.cells_y, dx, dy, full);
    case SweepVariant::Kind::kDiscreteQuantized:
      return DiscreteLattice(*proto.cells_x, *proto.cells_y, dx, dy, full, variant.bits);
    case SweepVariant::Kind::kGap:
      return DiscreteLattice(*proto.cells_x, *proto.cells_y, dx, dy,
                             variant.gap_ratio * full);
    case SweepVariant::Kind::kContinuous:
      break;
  }
  throw std::logic_error("variant_lattice called for the continuous variant");
}

int fail_with(std::ostream& diag, const std::exception& err) {
  diag << "error: " << err.what() << "\n";
  return 1;
}

}  // namespace

int run_sweep_response(const CommandContext& ctx, std::ostream& diag) {
  try {
    const ConfigDoc doc = load_config_file(ctx.config_path);
    const WaveSpec wave = build_wave(doc);
    const TilePrototype proto = build_tile_prototype(doc);
    const SweepSpec sweep = build_sweep(doc, ctx.unit);
    const TileSpec tile(proto.len_x, proto.len_y, proto.rho_eff);

    std::vector<std::optional<DiscreteLattice>> lattices;
    for (const SweepVariant& v : sweep.variants) {
      if (v.kind == SweepVariant::Kind::kContinuous) {
        lattices.push_back(std::nullopt);
      } else {
        lattices.push_back(variant_lattice(proto, v, doc.source));
      }
    }

    bool ok = false;
    std::ofstream out = open_output(ctx.out_path, diag, ok);
    if (!ok) return 1;
    write_manifest(out, RunManifest{"irstk sweep-response", fnv1a64(doc.text),
                                    ctx.seed.value_or(0)});
    out << "# dB reference: 20*log10(|g| / lambda)\n";
    const char* column = sweep.variable == SweepVariable::kThetaR   ? "theta_r_deg"
                         : sweep.variable == SweepVariable::kThetaT ? "theta_t_deg"
                                                                    : "beta_bar_x";
    out << column << ",g_abs_db,g_phase_rad,variant\n";

    for (int i = 0; i < sweep.points(); ++i) {
      const double v = sweep.value_at(i);
      double theta_t = sweep.theta_t;
      double theta_r = sweep.theta_r;
      TransmissionMode mode = sweep.mode;
      switch (sweep.variable) {
        case SweepVariable::kThetaR:
          theta_r = std::min(v, kPi / 2.0);  // guard the last grid point
          break;
        case SweepVariable::kThetaT:
          theta_t = v;
          break;
        case SweepVariable::kBetaBarX:
          mode = TransmissionMode(std::clamp(v, -1.0, 1.0), mode.beta_bar_y,
                                  mode.beta_bar_0);
          break;
      }
      const AngleTriple t(theta_t, sweep.phi_t, sweep.phi_pol);
      const AnglePair r(theta_r, sweep.phi_r);
      const double column_value =
          sweep.variable == SweepVariable::kBetaBarX ? v : rad_to_deg(v);
      for (std::size_t vi = 0; vi < sweep.variants.size(); ++vi) {
        const Complex g =
            lattices[vi] ? discrete_tile_response(t, r, mode, tile, *lattices[vi], wave)
                         : continuous_tile_response(t, r, mode, tile, wave);
        out << format_double(column_value) << ',' << format_double(amplitude_db(std::abs(g), wave.lambda))
            << ',' << format_double(std::arg(g)) << ',' << sweep.variants[vi].label << "\n";
      }
    }
    return 0;
  } catch (const std::exception& err) {
    return fail_with(diag, err);
  }
}

int run_codebook(const CommandContext& ctx, std::ostream& diag) {
  try {
    const ConfigDoc doc = load_config_file(ctx.config_path);
    const IrsLayout layout = build_layout(doc);
    const Codebook codebook = build_codebook(doc);
    const SweepSpec sweep = build_sweep(doc, ctx.unit);
    const AngleTriple incident(sweep.theta_t, sweep.phi_t, sweep.phi_pol);

    bool ok = false;
    std::ofstream out = open_output(ctx.out_path, diag, ok);
    if (!ok) return 1;
    write_manifest(out, RunManifest{"irstk codebook", fnv1a64(doc.text),
                                    ctx.seed.value_or(0)});
    out << "# dB reference: 20*log10(|g| / lambda)\n";
    out << "mode_index,theta_r_deg,g_abs_db\n";

    struct SummaryRow {
      std::size_t mode;
      double bx, by;
      std::optional<double> predicted_deg;
      double sweep_peak_deg;
    };
    std::vector<SummaryRow> summary;

    for (std::size_t m = 0; m < codebook.size(); ++m) {
      const TransmissionMode& mode = codebook.modes[m];
      const auto predicted = mode_peak_direction(mode, incident);
      // Each mode is cut along its own peak azimuth so the sweep can reach
      // the predicted maximum; evanescent modes fall back to the configured
      // azimuth.
      const double phi_cut = predicted ? predicted->phi_r : sweep.phi_r;
      double best_db = -std::numeric_limits<double>::infinity();
      double best_theta = sweep.start;
      for (int i = 0; i < sweep.points(); ++i) {
        const double theta = std::min(sweep.value_at(i), kPi / 2.0);
        const AnglePair r(theta, phi_cut);
        const Complex g = reference_tile_response(incident, r, mode, layout);
        const double db = amplitude_db(std::abs(g), layout.wave.lambda);
        out << m << ',' << format_double(rad_to_deg(theta)) << ',' << format_double(db)
            << "\n";
        if (db > best_db) {
          best_db = db;
          best_theta = theta;
        }
      }
      summary.push_back(SummaryRow{
          m, mode.beta_bar_x, mode.beta_bar_y,
          predicted ? std::optional<double>(rad_to_deg(predicted->theta_r)) : std::nullopt,
          rad_to_deg(best_theta)});
    }

    out << "\n# summary\n";
    out << "mode_index,beta_bar_x,beta_bar_y,predicted_peak_deg,sweep_peak_deg\n";
    for (const auto& row : summary) {
      out << row.mode << ',' << format_double(row.bx) << ',' << format_double(row.by) << ',';
      if (row.predicted_deg) {
        out << format_double(*row.predicted_deg);
      } else {
        out << "evanescent";
      }
      out << ',' << format_double(row.sweep_peak_deg) << "\n";
    }
    return 0;
  } catch (const std::exception& err) {
    return fail_with(diag, err);
  }
}

int run_e2e(const CommandContext& ctx, std::ostream& diag) {
  try {
    const ConfigDoc doc = load_config_file(ctx.config_path);
    const ChannelScenario scenario = build_scenario(doc, ctx.unit, ctx.seed);
    const ModeSelection selection = build_selection(doc, scenario);
    const Objective objective = build_objective(doc, scenario);

    bool ok = false;
    std::ofstream out = open_output(ctx.out_path, diag, ok);
    if (!ok) return 1;
    write_manifest(out, RunManifest{"irstk e2e", fnv1a64(doc.text), scenario.rng_seed});

    for (std::size_t j = 0; j < scenario.receivers.size(); ++j) {
      for (std::size_t i = 0; i < scenario.transmitters.size(); ++i) {
        const Eigen::MatrixXcd H = end_to_end_matrix(j, i, selection, scenario);
        out << "# H receiver=" << j << " transmitter=" << i << " rows=" << H.rows()
            << " cols=" << H.cols() << "\n";
        for (Eigen::Index r = 0; r < H.rows(); ++r) {
          for (Eigen::Index c = 0; c < H.cols(); ++c) {
            if (c > 0) out << ',';
            out << format_double(H(r, c).real()) << ',' << format_double(H(r, c).imag());
          }
          out << "\n";
        }
      }
    }

    if (!objective.isotropic) {
      const auto received =
          apply_channel(selection, scenario, objective.transmit, build_realization(doc));
      for (std::size_t j = 0; j < received.size(); ++j) {
        out << "# y receiver=" << j << " elements=" << received[j].size() << "\n";
        for (Eigen::Index l = 0; l < received[j].size(); ++l) {
          out << format_double(received[j](l).real()) << ','
              << format_double(received[j](l).imag()) << "\n";
        }
      }
    }
    return 0;
  } catch (const std::exception& err) {
    return fail_with(diag, err);
  }
}

int run_optimize(const CommandContext& ctx, std::ostream& diag) {
  try {
    const ConfigDoc doc = load_config_file(ctx.config_path);
    const ChannelScenario scenario = build_scenario(doc, ctx.unit, ctx.seed);
    const Objective objective = build_objective(doc, scenario);
    const OptimizeOptions options = build_optimize_options(doc);

    bool ok = false;
    std::ofstream out = open_output(ctx.out_path, diag, ok);
    if (!ok) return 1;
    write_manifest(out, RunManifest{"irstk optimize", fnv1a64(doc.text), scenario.rng_seed});
    out << "# objective: "
        << (objective.kind == ObjectiveKind::kSumReceivedPower ? "sum_power" : "min_power")
        << (objective.isotropic ? " isotropic" : " fixed") << "\n";
    out << "algorithm,tile_index,mode_index\n";

    bool produced = false;
    auto emit = [&](const char* name, const OptimizationResult& result) {
      for (std::size_t n = 0; n < result.selection.assignment.size(); ++n) {
        out << name << ',' << n << ',' << result.selection.assignment[n] << "\n";
      }
      out << "# " << name << " objective_value: " << format_double(result.objective_value)
          << "\n";
      out << "# " << name << " evaluations: " << result.evaluations << "\n";
      out << "# " << name << " trace:";
      for (const double v : result.trace) out << ' ' << format_double(v);
      out << "\n";
      produced = true;
    };

    std::optional<OptimizationResult> exhaustive;
    std::optional<OptimizationResult> greedy;
    if (options.run_exhaustive) {
      try {
        exhaustive = exhaustive_search(scenario, objective, options.budget);
        emit("exhaustive", *exhaustive);
      } catch (const SearchBudgetError& err) {
        out << "# exhaustive refused: " << err.what() << "\n";
        diag << "note: " << err.what() << "\n";
      }
    }
    if (options.run_greedy) {
      std::optional<ModeSelection> initial;
      if (options.random_init) {
        initial = random_selection(scenario.layout.size(), scenario.codebook.size(),
                                   options.init_seed.value_or(scenario.rng_seed));
      }
      greedy = greedy_search(scenario, objective, options.passes, initial);
      emit("greedy", *greedy);
    }
    if (exhaustive && greedy) {
      out << "# comparison: exhaustive_objective="
          << format_double(exhaustive->objective_value)
          << " greedy_objective=" << format_double(greedy->objective_value) << "\n";
    }
    if (!produced) {
      diag << "error: no search produced a result (exhaustive refused and greedy disabled)\n";
      return 1;
    }
    return 0;
  } catch (const std::exception& err) {
    return fail_with(diag, err);
  }
}

int run_link_budget(const LinkBudgetArgs& args, std::ostream& out, std::ostream& diag) {
  try {
    const WaveSpec wave = WaveSpec::from_frequency(args.frequency_hz);
    const double area = required_irs_area(args.rho_d, args.rho_t, args.rho_r, wave);
    const double spacing = args.spacing.value_or(wave.lambda / 2.0);
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
      throw std::domain_error("spacing must be positive and finite");
    }
    const double cells_exact = area / (spacing * spacing);
    const double ratio = link_budget_ratio(args.rho_d, args.rho_t, args.rho_r, area, wave);

    std::ostringstream report;
    std::ostringstream key;
    key << "rho_d=" << format_double(args.rho_d) << ";rho_t=" << format_double(args.rho_t)
        << ";rho_r=" << format_double(args.rho_r)
        << ";frequency_hz=" << format_double(args.frequency_hz)
        << ";spacing=" << format_double(spacing);
    write_manifest(report, RunManifest{"irstk link-budget", fnv1a64(key.str()), 0});
    report << "frequency_hz: " << format_double(args.frequency_hz) << "\n";
    report << "lambda_m: " << format_double(wave.lambda) << "\n";
    report << "rho_d_m: " << format_double(args.rho_d) << "\n";
    report << "rho_t_m: " << format_double(args.rho_t) << "\n";
    report << "rho_r_m: " << format_double(args.rho_r) << "\n";
    report << "required_area_m2: " << format_double(area) << "\n";
    report << "cell_spacing_m: " << format_double(spacing) << "\n";
    report << "required_cells_exact: " << format_double(cells_exact) << "\n";
    report << "required_cells: " << static_cast<long long>(std::ceil(cells_exact)) << "\n";
    report << "power_ratio_at_required_area: " << format_double(ratio) << "\n";
    report << "direct_leg_amplitude: " << format_double(free_space_gain(args.rho_d)) << "\n";

    out << report.str();
    if (!args.out_path.empty()) {
      std::ofstream file(args.out_path, std::ios::binary);
      if (!file) {
        diag << "error: cannot write output file: " << args.out_path << "\n";
        return 1;
      }
      file << report.str();
    }
    return 0;
  } catch (const std::exception& err) {
    return fail_with(diag, err);
  }
}

}  // namespace irs::cli
