// SPDX-License-Identifier: Apache-2.0
//
// irstk: reflecting-surface simulation and optimization toolkit.
//   sweep-response  tile response vs. a swept angle or mode parameter
//   codebook        per-mode patterns, predicted and swept peak directions
//   e2e             end-to-end channel matrices for a full scenario
//   optimize        exhaustive / greedy per-tile mode selection
//   link-budget     aperture sizing against a direct free-space link
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "irs/commands.hpp"
#include "irs/version.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  bool radians = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config, "Scenario config file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", flags.out, "Output file path")->required();
  cmd->add_option("--seed", flags.seed, "Override the [paths] seed");
  cmd->add_flag("--radians", flags.radians,
                "Interpret config angles as radians (default: degrees)");
}

irs::cli::CommandContext to_context(const CommonFlags& flags) {
  return irs::cli::CommandContext{
      flags.config, flags.out, flags.seed,
      flags.radians ? irs::cli::AngleUnit::kRadians : irs::cli::AngleUnit::kDegrees};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reflecting-surface simulation and optimization toolkit"};
  app.set_version_flag("--version", std::string("irstk ") + irs::kVersion);
  app.require_subcommand(1);

  CommonFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand(
      "sweep-response", "Tile response vs. a swept angle or mode parameter");
  add_common(sweep, sweep_flags);

  CommonFlags codebook_flags;
  CLI::App* codebook =
      app.add_subcommand("codebook", "Per-mode patterns and peak directions");
  add_common(codebook, codebook_flags);

  CommonFlags e2e_flags;
  CLI::App* e2e = app.add_subcommand("e2e", "End-to-end channel matrices");
  add_common(e2e, e2e_flags);

  CommonFlags optimize_flags;
  CLI::App* optimize =
      app.add_subcommand("optimize", "Per-tile transmission-mode selection");
  add_common(optimize, optimize_flags);

  irs::cli::LinkBudgetArgs budget;
  CLI::App* link = app.add_subcommand(
      "link-budget", "Aperture sizing against a direct free-space link");
  link->add_option("--rho-d", budget.rho_d, "Direct-link distance, m")->required();
  link->add_option("--rho-t", budget.rho_t, "Transmitter-to-surface distance, m")->required();
  link->add_option("--rho-r", budget.rho_r, "Surface-to-receiver distance, m")->required();
  link->add_option("--freq", budget.frequency_hz, "Carrier frequency, Hz")->required();
  link->add_option("--spacing", budget.spacing,
                   "Unit-cell spacing, m (default: lambda/2)");
  link->add_option("--out", budget.out_path, "Also write the report to this file");

  CLI11_PARSE(app, argc, argv);

  if (sweep->parsed()) {
    return irs::cli::run_sweep_response(to_context(sweep_flags), std::cerr);
  }
  if (codebook->parsed()) {
    return irs::cli::run_codebook(to_context(codebook_flags), std::cerr);
  }
  if (e2e->parsed()) {
    return irs::cli::run_e2e(to_context(e2e_flags), std::cerr);
  }
  if (optimize->parsed()) {
    return irs::cli::run_optimize(to_context(optimize_flags), std::cerr);
  }
  return irs::cli::run_link_budget(budget, std::cout, std::cerr);
}
