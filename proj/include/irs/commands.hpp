// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "irs/config.hpp"

namespace irs::cli {

struct CommandContext {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;  // overrides the [paths] seed when set
  AngleUnit unit = AngleUnit::kDegrees;
};

// Each command loads the config, writes its output file, and reports problems
// on diag; the return value is the process exit code. Angle columns in output
// files are always degrees; config hashes and number formatting are
// deterministic, so a rerun differs only in the manifest timestamp line.
int run_sweep_response(const CommandContext& ctx, std::ostream& diag);
int run_codebook(const CommandContext& ctx, std::ostream& diag);
int run_e2e(const CommandContext& ctx, std::ostream& diag);
int run_optimize(const CommandContext& ctx, std::ostream& diag);

struct LinkBudgetArgs {
  double rho_d = 0.0;
  double rho_t = 0.0;
  double rho_r = 0.0;
  double frequency_hz = 0.0;
  std::optional<double> spacing;  // cell spacing in meters; default lambda/2
  std::string out_path;           // empty: report only to the `out` stream
};

int run_link_budget(const LinkBudgetArgs& args, std::ostream& out, std::ostream& diag);

}  // namespace irs::cli
