// SPDX-License-Identifier: Apache-2.0
//
// The proxy accelerator's optimal-architecture set: constrained argmaxes over
// a grid of (latency, energy) budgets, reused to pick architectures for every
// other accelerator.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "cosearch/evaluation.hpp"

namespace cosearch {

struct ConstraintPoint {
  double latency_budget = 0;  // cycles
  double energy_budget = 0;   // nJ

  bool operator==(const ConstraintPoint&) const = default;
};

class EmptyOptimalSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OptimalSetEntry {
  std::size_t arch = 0;
  std::uint64_t proxy_latency = 0;
  double proxy_energy = 0;
  double accuracy = 0;
};

struct OptimalSet {
  std::size_t proxy = 0;
  std::vector<ConstraintPoint> grid;
  std::vector<OptimalSetEntry> entries;  // first-seen order over the grid
  /// Entry index chosen at each grid point; nullopt where infeasible.
  std::vector<std::optional<std::size_t>> grid_choice;

  std::size_t size() const noexcept { return entries.size(); }
};

struct OptimalSetOptions {
  /// When > 0, also keep architectures feasible at a grid point whose accuracy
  /// is within this many points of that point's optimum and which no other
  /// feasible architecture dominates on (accuracy, latency, energy). Off by
  /// default.
  double near_optimal_slack = 0.0;
};

/// Costs of every architecture on one accelerator (num_archs evaluations).
std::vector<PerfEstimate> scan_accelerator(const CountingOracle& oracle, std::size_t accel);

/// Argmax of accuracy among architectures within both budgets, using the
/// shared tie-break. `costs` holds every architecture's cost on one accelerator.
std::optional<std::size_t> constrained_argmax(const CoDesignProblem& problem,
                                              std::span<const PerfEstimate> costs,
                                              double latency_budget, double energy_budget);

/// Same, evaluating every architecture on `accel` through the oracle.
std::optional<std::size_t> constrained_argmax(const CoDesignProblem& problem,
                                              const CountingOracle& oracle, std::size_t accel,
                                              double latency_budget, double energy_budget);

/// K budgets at quantile levels k/K (nearest rank, k = 1..K) of the proxy's
/// observed latencies and energies, paired level by level. Coincident points
/// are dropped with a warning, so the grid may have fewer than K points.
std::vector<ConstraintPoint> build_constraint_grid(std::span<const PerfEstimate> proxy_costs,
                                                   std::size_t k);

/// Union of constrained argmaxes over the grid. Throws EmptyOptimalSetError
/// when every grid point is infeasible.
OptimalSet build_optimal_set(const CoDesignProblem& problem,
                             std::span<const PerfEstimate> proxy_costs, std::size_t proxy,
                             std::span<const ConstraintPoint> grid,
                             const OptimalSetOptions& options = {});

/// Scans the proxy once (num_archs evaluations) and builds the set.
OptimalSet build_optimal_set(const CoDesignProblem& problem, const CountingOracle& oracle,
                             std::size_t proxy, std::span<const ConstraintPoint> grid,
                             const OptimalSetOptions& options = {});

/// Evaluates each set entry on `target` (set.size() evaluations) and returns
/// the best one within budget, or nullopt.
std::optional<std::size_t> select_from_set(const CoDesignProblem& problem,
                                           const CountingOracle& oracle, const OptimalSet& set,
                                           std::size_t target, double latency_budget,
                                           double energy_budget);

/// Selection from already-known costs of the set entries (no evaluations).
std::optional<std::size_t> select_from_costs(const CoDesignProblem& problem, const OptimalSet& set,
                                             std::span<const PerfEstimate> entry_costs,
                                             double latency_budget, double energy_budget);

/// Serialized with the proxy's identity; architectures are embedded when
/// `space` is given.
nlohmann::json to_json(const OptimalSet& set, const Accelerator& proxy,
                       const ArchSpaceSample* space = nullptr);

}  // namespace cosearch
