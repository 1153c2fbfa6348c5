// SPDX-License-Identifier: Apache-2.0
#include "irs/optimizer.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace irs {

namespace {

double receiver_power(std::size_t j, const ModeSelection& selection,
                      const ChannelScenario& scenario, const Objective& objective) {
  if (objective.isotropic) {
    double p = 0.0;
    for (std::size_t i = 0; i < scenario.transmitters.size(); ++i) {
      const Eigen::MatrixXcd H = end_to_end_matrix(j, i, selection, scenario);
      p += H.squaredNorm() / static_cast<double>(scenario.transmitters[i].size());
    }
    return p;
  }
  Eigen::VectorXcd y =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(scenario.receivers[j].size()));
  for (std::size_t i = 0; i < scenario.transmitters.size(); ++i) {
    y += end_to_end_matrix(j, i, selection, scenario) * objective.transmit[i];
  }
  return y.squaredNorm();
}

void check_objective(const ChannelScenario& scenario, const Objective& objective) {
  if (objective.isotropic) return;
  if (objective.transmit.size() != scenario.transmitters.size()) {
    throw std::domain_error("objective needs one transmit vector per transmitter");
  }
  for (std::size_t i = 0; i < objective.transmit.size(); ++i) {
    if (static_cast<std::size_t>(objective.transmit[i].size()) !=
        scenario.transmitters[i].size()) {
      throw std::domain_error("objective transmit vector length must match the array size");
    }
  }
}

}  // namespace

double evaluate_objective(const ModeSelection& selection,
                          const ChannelScenario& scenario,
                          const Objective& objective) {
  scenario.validate();
  check_objective(scenario, objective);
  if (scenario.receivers.empty()) return 0.0;
  if (objective.kind == ObjectiveKind::kSumReceivedPower) {
    double total = 0.0;
    for (std::size_t j = 0; j < scenario.receivers.size(); ++j) {
      total += receiver_power(j, selection, scenario, objective);
    }
    return total;
  }
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < scenario.receivers.size(); ++j) {
    worst = std::min(worst, receiver_power(j, selection, scenario, objective));
  }
  return worst;
}

OptimizationResult exhaustive_search(const ChannelScenario& scenario,
                                     const Objective& objective,
                                     std::uint64_t budget) {
  scenario.validate();
  check_objective(scenario, objective);
  const std::size_t num_tiles = scenario.layout.size();
  const std::uint64_t num_modes = scenario.codebook.size();

  // Overflow-safe M^N against the budget.
  std::uint64_t space = 1;
  for (std::size_t n = 0; n < num_tiles; ++n) {
    if (space > budget / num_modes + 1) {
      space = budget + 1;
      break;
    }
    space *= num_modes;
  }
  if (space > budget) {
    throw SearchBudgetError("exhaustive search refused: " + std::to_string(num_modes) +
                            "^" + std::to_string(num_tiles) + " assignments exceed budget " +
                            std::to_string(budget));
  }

  OptimizationResult result;
  result.selection.assignment.assign(num_tiles, 0);
  ModeSelection current;
  current.assignment.assign(num_tiles, 0);
  double best = -std::numeric_limits<double>::infinity();
  bool done = false;
  while (!done) {
    const double value = evaluate_objective(current, scenario, objective);
    ++result.evaluations;
    if (value > best) {  // strict: first maximizer is lexicographically smallest
      best = value;
      result.selection = current;
      result.trace.push_back(value);
    }
    // Lexicographic odometer, last tile fastest.
    done = true;
    for (std::size_t n = num_tiles; n-- > 0;) {
      if (++current.assignment[n] < num_modes) {
        done = false;
        break;
      }
      current.assignment[n] = 0;
    }
  }
  result.objective_value = best;
  return result;
}

ModeSelection random_selection(std::size_t num_tiles, std::size_t num_modes,
                               std::uint64_t seed) {
  if (num_modes == 0) {
    throw std::domain_error("random_selection needs at least one mode");
  }
  auto splitmix64 = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  ModeSelection sel;
  sel.assignment.resize(num_tiles);
  for (std::size_t n = 0; n < num_tiles; ++n) {
    sel.assignment[n] =
        static_cast<std::size_t>(splitmix64(splitmix64(seed) ^ (n + 1)) % num_modes);
  }
  return sel;
}

OptimizationResult greedy_search(const ChannelScenario& scenario,
                                 const Objective& objective, int passes,
                                 const std::optional<ModeSelection>& initial) {
  scenario.validate();
  check_objective(scenario, objective);
  if (passes < 1) {
    throw std::domain_error("passes must be >= 1");
  }
  const std::size_t num_tiles = scenario.layout.size();
  const std::size_t num_modes = scenario.codebook.size();

  OptimizationResult result;
  result.selection.assignment.assign(num_tiles, 0);
  if (initial) {
    if (initial->assignment.size() != num_tiles) {
      throw std::domain_error("initial selection must assign exactly one mode per tile");
    }
    for (std::size_t m : initial->assignment) {
      if (m >= num_modes) {
        throw std::domain_error("initial selection mode index out of range");
      }
    }
    result.selection = *initial;
  }

  if (num_tiles == 0) {
    result.objective_value = evaluate_objective(result.selection, scenario, objective);
    result.evaluations = 1;
    result.trace.push_back(result.objective_value);
    return result;
  }

  double last_value = -std::numeric_limits<double>::infinity();
  for (int pass = 0; pass < passes; ++pass) {
    bool changed = false;
    for (std::size_t n = 0; n < num_tiles; ++n) {
      const std::size_t before = result.selection.assignment[n];
      std::size_t best_mode = 0;
      double best_value = -std::numeric_limits<double>::infinity();
      for (std::size_t m = 0; m < num_modes; ++m) {
        result.selection.assignment[n] = m;
        const double value = evaluate_objective(result.selection, scenario, objective);
        ++result.evaluations;
        if (value > best_value) {  // ties keep the smallest mode index
          best_value = value;
          best_mode = m;
        }
      }
      result.selection.assignment[n] = best_mode;
      result.trace.push_back(best_value);
      last_value = best_value;
      if (best_mode != before) changed = true;
    }
    if (!changed) break;
  }
  result.objective_value = last_value;
  return result;
}

}  // namespace irs
