// SPDX-License-Identifier: Apache-2.0
//
// Dense (architecture x accelerator) performance table and its CSV form:
//   arch_id,accel_id,latency_cycles,energy_nj

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cosearch/accel_model.hpp"
#include "cosearch/arch_space.hpp"

namespace cosearch {

enum class Metric { latency, energy };
std::string_view to_string(Metric m);

class PerfTable {
 public:
  PerfTable() = default;
  PerfTable(std::size_t num_archs, std::size_t num_accels);

  std::size_t num_archs() const noexcept { return num_archs_; }
  std::size_t num_accels() const noexcept { return num_accels_; }

  PerfEstimate at(std::size_t arch, std::size_t accel) const {
    const auto i = arch * num_accels_ + accel;
    return {latency_[i], energy_[i]};
  }
  void set(std::size_t arch, std::size_t accel, const PerfEstimate& p) {
    const auto i = arch * num_accels_ + accel;
    latency_[i] = p.latency_cycles;
    energy_[i] = p.energy_nj;
  }

  /// Per-architecture values of one accelerator's column.
  std::vector<double> column(std::size_t accel, Metric metric) const;

  bool operator==(const PerfTable&) const = default;

 private:
  std::size_t num_archs_ = 0;
  std::size_t num_accels_ = 0;
  std::vector<std::uint64_t> latency_;
  std::vector<double> energy_;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Evaluates every (architecture, accelerator) pair. Rows are split across
/// `threads` workers; the result does not depend on the thread count.
PerfTable compute_perf_table(const ArchSpaceSample& space, std::span<const Accelerator> accels,
                             unsigned threads = 1, const ProgressFn& progress = {});

/// Same, for layer-wise mixed plans (one column per plan). Architectures with
/// fewer than 22 layers throw PartitionInfeasibleError.
PerfTable compute_mixed_table(const ArchSpaceSample& space,
                              std::span<const MixedDataflowPlan> plans,
                              std::span<const Accelerator> choices, unsigned threads = 1);

void write_perf_table_csv(const PerfTable& table, std::ostream& out);

/// Throws InvalidInputError naming any missing (arch, accel) cells.
PerfTable read_perf_table_csv(std::istream& in);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace cosearch
