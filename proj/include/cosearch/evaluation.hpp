// SPDX-License-Identifier: Apache-2.0
//
// What the search strategies see: per-architecture accuracy and ordering
// keys, per-accelerator resource cost, and a cost source reached only through
// a counting oracle so evaluation totals are exact.

#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cosearch/accel_model.hpp"
#include "cosearch/arch_space.hpp"
#include "cosearch/perf_table.hpp"

namespace cosearch {

/// Raw (uncounted) access to Latency(a, h) and Energy(a, h).
class CostSource {
 public:
  virtual ~CostSource() = default;
  virtual std::size_t num_archs() const = 0;
  virtual std::size_t num_accels() const = 0;
  virtual PerfEstimate cost(std::size_t arch, std::size_t accel) const = 0;
};

/// Lookups into a precomputed table.
class TableCostSource final : public CostSource {
 public:
  explicit TableCostSource(const PerfTable& table) : table_(&table) {}
  std::size_t num_archs() const override { return table_->num_archs(); }
  std::size_t num_accels() const override { return table_->num_accels(); }
  PerfEstimate cost(std::size_t arch, std::size_t accel) const override {
    return table_->at(arch, accel);
  }

 private:
  const PerfTable* table_;
};

/// Runs the analytical model on demand (layer lists are lowered once).
class ModelCostSource final : public CostSource {
 public:
  ModelCostSource(const ArchSpaceSample& space, std::span<const Accelerator> accels);
  std::size_t num_archs() const override { return layers_.size(); }
  std::size_t num_accels() const override { return accels_.size(); }
  PerfEstimate cost(std::size_t arch, std::size_t accel) const override;

 private:
  std::vector<std::vector<LayerDescriptor>> layers_;
  std::vector<Accelerator> accels_;
};

/// Every evaluate() call is one charged evaluation. Thread-safe.
class CountingOracle {
 public:
  explicit CountingOracle(const CostSource& source) : source_(&source) {}

  PerfEstimate evaluate(std::size_t arch, std::size_t accel) const {
    count_.fetch_add(1, std::memory_order_relaxed);
    return source_->cost(arch, accel);
  }
  std::uint64_t evaluations() const noexcept { return count_.load(std::memory_order_relaxed); }
  std::size_t num_archs() const { return source_->num_archs(); }
  std::size_t num_accels() const { return source_->num_accels(); }

 private:
  const CostSource* source_;
  mutable std::atomic<std::uint64_t> count_{0};
};

struct CoDesignProblem {
  const CostSource* costs = nullptr;
  std::vector<double> accuracy;               // per architecture, hardware independent
  std::vector<std::uint32_t> canonical_rank;  // final tie-break key per architecture
  std::vector<double> resource;               // HardwareResource(h) per accelerator

  std::size_t num_archs() const noexcept { return accuracy.size(); }
  std::size_t num_accels() const noexcept { return resource.size(); }

  /// Accuracy from accuracy_oracle, ordering from canonical serialization,
  /// resource from hardware_resource.
  static CoDesignProblem from_spaces(const ArchSpaceSample& space,
                                     std::span<const Accelerator> accels,
                                     const CostSource& costs, const ResourceModel& model = {});

  /// Throws InvalidInputError when sizes disagree with the cost source.
  void validate() const;
};

/// An architecture's standing on one accelerator.
struct Candidate {
  std::size_t arch = 0;
  double accuracy = 0;
  PerfEstimate cost;
  std::uint32_t canonical_rank = 0;
};

/// Shared tie-break: higher accuracy, then lower latency, then lower energy,
/// then earlier canonical order.
bool ranks_before(const Candidate& a, const Candidate& b) noexcept;

inline bool within_budget(const PerfEstimate& p, double latency_budget, double energy_budget) {
  return static_cast<double>(p.latency_cycles) <= latency_budget && p.energy_nj <= energy_budget;
}

}  // namespace cosearch
