// SPDX-License-Identifier: Apache-2.0
//
// Analytical accelerator cost model. Latency is a roofline: the maximum of a
// compute term (MACs over spatially mapped PEs) and two traffic terms (NoC and
// DRAM bytes over their bandwidths). Energy is an access-count model that does
// not depend on either bandwidth.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cosearch/arch_space.hpp"

namespace cosearch {

enum class Dataflow : std::uint8_t {
  kc_p,  // output/input channels spatial (NVDLA-like)
  yr_p,  // output rows x filter rows spatial (Eyeriss-like row stationary)
  x_p,   // output columns spatial, weight stationary
};

inline constexpr std::array<Dataflow, 3> kAllDataflows{Dataflow::kc_p, Dataflow::yr_p,
                                                       Dataflow::x_p};

std::string_view to_string(Dataflow df);
Dataflow dataflow_from_string(std::string_view name);

struct Accelerator {
  static constexpr std::array<std::uint32_t, 6> kPeChoices{16, 32, 64, 128, 256, 512};
  static constexpr std::array<std::uint32_t, 8> kNocChoices{300, 400, 500, 600,
                                                            700, 800, 900, 1000};
  static constexpr std::array<std::uint32_t, 9> kOffchipChoices{50,  100, 150, 200, 250,
                                                                275, 300, 325, 350};
  static constexpr std::size_t kGridPerDataflow =
      kPeChoices.size() * kNocChoices.size() * kOffchipChoices.size();

  std::uint32_t num_pes = 16;
  std::uint32_t noc_bandwidth = 300;     // bytes / cycle
  std::uint32_t offchip_bandwidth = 50;  // bytes / cycle
  Dataflow dataflow = Dataflow::kc_p;

  auto operator<=>(const Accelerator&) const = default;
};

void validate(const Accelerator& accel);
std::string describe(const Accelerator& accel);
nlohmann::json to_json(const Accelerator& accel);
Accelerator accelerator_from_json(const nlohmann::json& j);

struct PerfEstimate {
  std::uint64_t latency_cycles = 0;
  double energy_nj = 0.0;

  PerfEstimate& operator+=(const PerfEstimate& other) noexcept {
    latency_cycles += other.latency_cycles;
    energy_nj += other.energy_nj;
    return *this;
  }
  bool operator==(const PerfEstimate&) const = default;
};

struct EnergyModel {
  double mac = 1.0;
  double scratchpad = 6.0;
  double noc = 2.0;
  double dram = 200.0;
  std::uint64_t spad_accesses_per_mac = 3;  // two operand reads, one accumulation
};

inline constexpr EnergyModel kEnergyModel{};

/// Per-layer intermediate quantities; exposed for tests and diagnostics.
struct LayerTraffic {
  std::uint64_t macs = 0;
  std::uint64_t effective_pes = 0;
  std::uint64_t compute_cycles = 0;
  std::uint64_t noc_bytes = 0;
  std::uint64_t offchip_bytes = 0;
  std::uint64_t spad_accesses = 0;
};

/// Number of PEs a dataflow can keep busy on this layer.
std::uint64_t spatial_utilization(const LayerDescriptor& layer, const Accelerator& accel);

LayerTraffic layer_traffic(const LayerDescriptor& layer, const Accelerator& accel);
PerfEstimate estimate_layer(const LayerDescriptor& layer, const Accelerator& accel);

PerfEstimate estimate_layers(std::span<const LayerDescriptor> layer_list, const Accelerator& accel);
PerfEstimate estimate_model(const Architecture& arch, const Accelerator& accel);

/// Batched form of estimate_layers over many accelerators. Uses the fastest
/// kernel the CPU supports; results are bit-identical to estimate_layers.
std::vector<PerfEstimate> estimate_layers_batch(std::span<const LayerDescriptor> layer_list,
                                                std::span<const Accelerator> accels);

// ---------------------------------------------------------------------------
// Layer-wise mixed dataflow
// ---------------------------------------------------------------------------

inline constexpr std::size_t kMixedSegments = 22;

/// One accelerator per model part: first layer, twenty intermediate groups,
/// last layer.
struct MixedDataflowPlan {
  std::array<Accelerator, kMixedSegments> segments{};

  static MixedDataflowPlan uniform(const Accelerator& accel);
  bool operator==(const MixedDataflowPlan&) const = default;
};

nlohmann::json to_json(const MixedDataflowPlan& plan);
MixedDataflowPlan plan_from_json(const nlohmann::json& j);

/// Half-open layer index ranges of the 22 parts. Intermediate layers are split
/// into 20 groups of floor(n/20), the remainder going to the last group.
/// Throws PartitionInfeasibleError for fewer than 22 layers.
std::array<std::pair<std::size_t, std::size_t>, kMixedSegments> mixed_partition(
    std::size_t num_layers);

PerfEstimate estimate_mixed(const Architecture& arch, const MixedDataflowPlan& plan);
PerfEstimate estimate_mixed(std::span<const LayerDescriptor> layer_list,
                            const MixedDataflowPlan& plan);

/// Seeded plans drawing every segment uniformly from `choices`.
std::vector<MixedDataflowPlan> sample_mixed_plans(std::uint64_t seed, std::size_t count,
                                                  std::span<const Accelerator> choices);

// ---------------------------------------------------------------------------
// Hardware space
// ---------------------------------------------------------------------------

struct HwSpaceSample {
  std::uint64_t seed = 0;
  std::vector<Accelerator> accelerators;

  std::size_t size() const noexcept { return accelerators.size(); }
};

/// Draws `count` distinct accelerators from the PE x NoC x off-chip grid
/// crossed with `dataflows`. Throws SpaceExhaustedError when count exceeds the
/// grid.
HwSpaceSample sample_hardware(std::uint64_t seed, std::size_t count,
                              std::span<const Dataflow> dataflows);

/// One sample_hardware call per dataflow with the same seed, concatenated in
/// the order given.
HwSpaceSample sample_hardware_per_dataflow(std::uint64_t seed, std::size_t count_per_dataflow,
                                           std::span<const Dataflow> dataflows);

/// Smallest spatial extents any layer of a space offers to each dataflow.
struct SpaceExtents {
  std::uint64_t min_kc = 0;  // K * C over MAC layers (C = 1 for depthwise)
  std::uint64_t min_yr = 0;  // Y' * R over MAC layers
};

SpaceExtents space_extents(const ArchSpaceSample& space);

/// A KC-P or YR-P pair is unsupported when the space's smallest layer cannot
/// occupy num_pes / divisor PEs under that dataflow, or when the NoC delivers
/// fewer than min_noc_per_pe bytes per cycle per PE. X-P is always supported.
/// A divisor or ratio of 0 disables that clause.
struct SupportRule {
  std::uint32_t kcp_divisor = 8;
  std::uint32_t yrp_divisor = 8;
  double min_noc_per_pe = 0.0;
};

/// Thresholds that reproduce 133 (cell) / 132 (mobile) supported pairs for the
/// default experiment sample (seed 1, 51 per dataflow).
SupportRule calibrated_support_rule(SpaceKind kind);

bool is_supported(const Accelerator& accel, const SpaceExtents& extents, const SupportRule& rule);
HwSpaceSample filter_supported(const HwSpaceSample& sample, const SpaceExtents& extents,
                               const SupportRule& rule);

struct ResourceModel {
  double area_per_pe = 1.0;
  double area_per_noc_byte = 0.01;
};

double hardware_resource(const Accelerator& accel, const ResourceModel& model = {});

}  // namespace cosearch
