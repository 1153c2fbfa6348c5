// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "irs/channel.hpp"

namespace irs {

// Scalar figure of merit for a mode selection, always evaluated at zero
// noise.
enum class ObjectiveKind {
  kSumReceivedPower,  // sum over receivers of received signal power
  kMinLinkPower,      // worst receiver's power (max-min fairness)
};

// Excitation model under the objective: either the isotropic average
// sum_i ||H^(j,i)||_F^2 / T_i per receiver, or fixed per-transmitter
// excitation vectors.
struct Objective {
  ObjectiveKind kind = ObjectiveKind::kSumReceivedPower;
  bool isotropic = true;
  std::vector<Eigen::VectorXcd> transmit;  // used only when !isotropic
};

struct OptimizationResult {
  ModeSelection selection;
  double objective_value = 0.0;
  std::uint64_t evaluations = 0;
  // Monotone non-decreasing record: best-so-far improvements for the
  // exhaustive search, accepted per-tile values for the greedy search.
  std::vector<double> trace;
};

// Search space too large for the exhaustive budget; the message names M^N.
class SearchBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double evaluate_objective(const ModeSelection& selection,
                          const ChannelScenario& scenario,
                          const Objective& objective);

// Enumerates all M^N assignments in lexicographic order and keeps the first
// maximizer (ties resolve to the lexicographically smallest assignment).
// Throws SearchBudgetError when M^N exceeds budget.
OptimizationResult exhaustive_search(const ChannelScenario& scenario,
                                     const Objective& objective,
                                     std::uint64_t budget = 1'000'000);

// Coordinate ascent over tiles in index order, modes scanned in index order
// with strict improvement (ties keep the smallest mode index). Runs at most
// `passes` full passes, stopping after any pass that changes nothing; at most
// passes * N * M objective evaluations. The objective trace never decreases.
OptimizationResult greedy_search(const ChannelScenario& scenario,
                                 const Objective& objective, int passes = 8,
                                 const std::optional<ModeSelection>& initial = std::nullopt);

// Deterministic seeded restart point for greedy_search: uniform mode draw per
// tile from a counter-based stream, so a (seed, sizes) triple always yields
// the same selection.
ModeSelection random_selection(std::size_t num_tiles, std::size_t num_modes,
                               std::uint64_t seed);

}  // namespace irs
