// SPDX-License-Identifier: Apache-2.0
//
// Co-design strategies over one CoDesignProblem: fully coupled exhaustive
// search (the optimality oracle), fully decoupled search, and semi-decoupled
// search through a proxy accelerator's optimal set.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cosearch/evaluation.hpp"
#include "cosearch/pareto.hpp"

namespace cosearch {

struct DesignConstraints {
  double latency_budget = 0;   // cycles
  double energy_budget = 0;    // nJ
  double resource_budget = 0;  // resource units

  /// Throws InvalidInputError unless all three are positive and finite.
  void validate() const;
};

inline constexpr double kPermissive = std::numeric_limits<double>::max();

enum class Strategy { decoupled, coupled, semi_decoupled };
std::string_view to_string(Strategy s);

struct CoDesignOutcome {
  Strategy strategy = Strategy::coupled;
  std::optional<std::size_t> arch;
  std::optional<std::size_t> accel;
  double accuracy = std::numeric_limits<double>::quiet_NaN();  // NaN when infeasible
  PerfEstimate cost;                                             // of the chosen pair
  std::uint64_t evaluations = 0;
  std::size_t set_size = 0;  // semi-decoupled only

  bool feasible() const noexcept { return arch.has_value(); }
};

/// Indexes of accelerators with HardwareResource(h) <= H, in hardware order.
std::vector<std::size_t> resource_feasible(const CoDesignProblem& problem,
                                           const DesignConstraints& c);

/// Scans every architecture on every resource-feasible accelerator.
/// Accelerators are split across `threads` workers; the outcome and the count
/// do not depend on the split.
CoDesignOutcome fully_coupled_exhaustive(const CoDesignProblem& problem,
                                         const DesignConstraints& c, unsigned threads = 1);

enum class DecoupledOrder {
  architecture_first,  // NAS on the proxy, then the best accelerator for that network
  accelerator_first,   // fastest accelerator for the most accurate network, then NAS on it
};

CoDesignOutcome fully_decoupled(const CoDesignProblem& problem, const DesignConstraints& c,
                                std::size_t proxy,
                                DecoupledOrder order = DecoupledOrder::architecture_first);

/// Stage 2 only: picks from `set` on every resource-feasible accelerator.
/// Set entries are re-evaluated on every accelerator except the proxy, whose
/// costs are already stored in the set.
CoDesignOutcome semi_decoupled_stage2(const CoDesignProblem& problem, const CountingOracle& oracle,
                                      const OptimalSet& set, const DesignConstraints& c);

CoDesignOutcome semi_decoupled(const CoDesignProblem& problem, const DesignConstraints& c,
                               std::size_t proxy, std::size_t k,
                               const OptimalSetOptions& options = {});

// ---------------------------------------------------------------------------
// Comparison report
// ---------------------------------------------------------------------------

struct ComparisonRow {
  Strategy strategy = Strategy::coupled;
  std::optional<CoDesignOutcome> outcome;  // empty when the strategy threw
  std::string error;
  std::uint64_t expected_evaluations = 0;  // closed form
  double gap = std::numeric_limits<double>::quiet_NaN();  // oracle accuracy - this accuracy
  double wall_ms = 0;
};

struct ComparisonReport {
  DesignConstraints constraints;
  std::size_t proxy = 0;
  std::size_t k = 0;
  std::size_t num_archs = 0;
  std::size_t feasible_accels = 0;
  std::vector<ComparisonRow> rows;  // decoupled, coupled, semi-decoupled

  const ComparisonRow& row(Strategy s) const;
};

ComparisonReport run_comparison(const CoDesignProblem& problem, const DesignConstraints& c,
                                std::size_t proxy, std::size_t k, unsigned threads = 1);

nlohmann::json to_json(const ComparisonReport& report);
void write_comparison_csv(const std::vector<ComparisonReport>& reports, std::ostream& out);

// ---------------------------------------------------------------------------
// Proxy sweep
// ---------------------------------------------------------------------------

/// A target accelerator and the (L, E) budgets it must meet.
struct SweepPoint {
  std::size_t target = 0;
  double latency_budget = 0;
  double energy_budget = 0;
};

/// One proxy tried against the target of one sweep point: the accuracy picked
/// from the proxy's optimal set on the target, against the target's own
/// constrained argmax.
struct ProxySweepRow {
  std::size_t point_index = 0;
  std::size_t target = 0;
  std::size_t proxy = 0;
  std::size_t set_size = 0;
  double srcc_latency = 0;  // proxy vs target columns
  double srcc_energy = 0;
  double oracle_accuracy = std::numeric_limits<double>::quiet_NaN();
  double selected_accuracy = std::numeric_limits<double>::quiet_NaN();
  double gap = std::numeric_limits<double>::quiet_NaN();
};

/// Tries every accelerator as the proxy for each sweep point. Uses raw costs
/// (nothing is counted); optimal sets are built once per proxy.
std::vector<ProxySweepRow> proxy_sweep(const CoDesignProblem& problem,
                                       const std::vector<SweepPoint>& points, std::size_t k,
                                       unsigned threads = 1);

void write_proxy_sweep_csv(const std::vector<ProxySweepRow>& rows, std::ostream& out);

}  // namespace cosearch
