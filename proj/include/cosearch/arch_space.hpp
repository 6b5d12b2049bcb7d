// SPDX-License-Identifier: Apache-2.0
//
// Synthetic neural-architecture spaces: a DARTS-like cell stack and an
// AlphaNet-like mobile inverted-residual family. Each architecture lowers to
// a flat list of layer descriptors for costing and maps to a deterministic,
// hardware-independent accuracy.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cosearch {

// ---------------------------------------------------------------------------
// Layers
// ---------------------------------------------------------------------------

enum class LayerKind : std::uint8_t {
  standard_conv,
  depthwise_conv,
  pointwise_conv,
  pool,
  identity,
};

std::string_view to_string(LayerKind kind);

/// Dimensions consumed by the cost model. Tensors are one byte per element.
struct LayerDescriptor {
  std::uint32_t out_channels = 1;  // K
  std::uint32_t in_channels = 1;   // C
  std::uint32_t kernel_h = 1;      // R
  std::uint32_t kernel_w = 1;      // S
  std::uint32_t input_h = 1;       // Y
  std::uint32_t input_w = 1;       // X
  std::uint32_t stride = 1;
  std::uint32_t padding = 0;  // symmetric, applied to both spatial dims
  LayerKind kind = LayerKind::standard_conv;

  /// ceil((Y + 2*pad - R + 1) / stride)
  std::uint32_t output_h() const noexcept;
  std::uint32_t output_w() const noexcept;

  /// Input channels seen by one output channel: 1 for depthwise.
  std::uint64_t reduction_channels() const noexcept {
    return kind == LayerKind::depthwise_conv ? 1 : in_channels;
  }

  bool has_macs() const noexcept {
    return kind != LayerKind::pool && kind != LayerKind::identity;
  }

  /// K * C * R * S * Y' * X' (C = 1 for depthwise); 0 for pool and identity.
  std::uint64_t macs() const noexcept;
  std::uint64_t input_bytes() const noexcept;
  std::uint64_t weight_bytes() const noexcept;
  std::uint64_t output_bytes() const noexcept;

  bool operator==(const LayerDescriptor&) const = default;
};

/// Throws InvalidInputError when a dimension is zero or the output collapses.
void validate(const LayerDescriptor& layer);

/// "Same" padding for odd kernels: output spatial size = ceil(input / stride).
LayerDescriptor make_conv(LayerKind kind, std::uint32_t k, std::uint32_t c, std::uint32_t kernel,
                          std::uint32_t spatial, std::uint32_t stride);

// ---------------------------------------------------------------------------
// Architectures
// ---------------------------------------------------------------------------

enum class CellOp : std::uint8_t {
  sep_conv_3x3,
  sep_conv_5x5,
  dil_conv_3x3,
  dil_conv_5x5,
  max_pool_3x3,
  avg_pool_3x3,
  skip_connect,
};

inline constexpr std::size_t kNumCellOps = 7;
std::string_view to_string(CellOp op);

struct CellSlot {
  CellOp op = CellOp::skip_connect;
  std::uint8_t input = 0;  // node index in 0..node-1

  auto operator<=>(const CellSlot&) const = default;
};

/// DARTS-style cell: two cell inputs, four intermediate nodes with two op
/// slots each, and a concatenating output node. The same cell is stacked
/// `stack_depth` times; channels double at the two reduction positions.
struct CellArchitecture {
  static constexpr std::size_t kSlots = 8;
  static constexpr std::uint32_t kStackDepth = 20;
  static constexpr std::uint32_t kBaseChannels = 36;
  static constexpr std::array<std::uint32_t, 2> kReductionCells{6, 13};  // zero-based
  static constexpr std::uint32_t kStemMultiplier = 3;
  static constexpr std::uint32_t kInputSize = 32;
  static constexpr std::uint32_t kNumClasses = 10;

  std::array<CellSlot, kSlots> cell_ops{};
  std::uint32_t stack_depth = kStackDepth;
  std::uint32_t base_channels = kBaseChannels;

  auto operator<=>(const CellArchitecture&) const = default;
};

/// AlphaNet-style mobile network: stem conv, seven inverted-residual stages,
/// and a pointwise head. Stages 0 and 6 are fixed; stages 1..5 are searchable.
struct MobileArchitecture {
  static constexpr std::size_t kStages = 7;
  static constexpr std::array<std::uint32_t, 9> kWidths{16, 16, 24, 32, 64, 112, 192, 216, 1792};
  static constexpr std::array<std::uint32_t, kStages> kStrides{1, 2, 2, 2, 1, 2, 1};
  static constexpr std::array<std::uint32_t, 4> kResolutions{192, 224, 256, 288};
  static constexpr std::array<std::uint32_t, 5> kDepthChoices{2, 3, 4, 5, 6};
  static constexpr std::array<std::uint32_t, 3> kKernelChoices{3, 5, 7};
  static constexpr std::array<std::uint32_t, 3> kExpansionChoices{3, 4, 6};
  static constexpr std::uint32_t kFirstExpansion = 1;
  static constexpr std::uint32_t kLastExpansion = 6;

  std::uint32_t resolution = 224;
  std::array<std::uint32_t, kStages> stage_depths{1, 2, 2, 2, 2, 2, 1};
  std::array<std::uint32_t, kStages> stage_kernels{3, 3, 3, 3, 3, 3, 3};
  std::array<std::uint32_t, kStages> stage_expansions{1, 3, 3, 3, 3, 3, 6};

  auto operator<=>(const MobileArchitecture&) const = default;
};

using Architecture = std::variant<CellArchitecture, MobileArchitecture>;

enum class SpaceKind : std::uint8_t { cell, mobile };
std::string_view to_string(SpaceKind kind);
SpaceKind space_kind_from_string(std::string_view name);
SpaceKind kind_of(const Architecture& arch);

/// Throws InvalidInputError on any type-invariant violation.
void validate(const CellArchitecture& arch);
void validate(const MobileArchitecture& arch);
void validate(const Architecture& arch);

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// Canonical form: sorted keys and an explicit "kind" tag.
nlohmann::json to_json(const Architecture& arch);
Architecture architecture_from_json(const nlohmann::json& j);

/// Compact dump of to_json(); the hashing and ordering key.
std::string canonical_serialization(const Architecture& arch);

// ---------------------------------------------------------------------------
// Spaces
// ---------------------------------------------------------------------------

struct ArchSpaceSample {
  SpaceKind kind = SpaceKind::cell;
  std::uint64_t seed = 0;
  std::vector<Architecture> architectures;

  std::size_t size() const noexcept { return architectures.size(); }
};

/// Number of distinct architectures each generator can produce.
std::uint64_t cell_space_cardinality();
std::uint64_t mobile_space_cardinality();

ArchSpaceSample generate_cell_space(std::uint64_t seed, std::size_t count);
ArchSpaceSample generate_mobile_space(std::uint64_t seed, std::size_t count);
ArchSpaceSample generate_space(SpaceKind kind, std::uint64_t seed, std::size_t count);

// ---------------------------------------------------------------------------
// Lowering and oracles
// ---------------------------------------------------------------------------

std::vector<LayerDescriptor> layers(const Architecture& arch);

std::uint64_t flops(std::span<const LayerDescriptor> layer_list);
std::uint64_t flops(const Architecture& arch);

struct AccuracyCalibration {
  double base = 0.0;
  double gain = 0.0;
  double flops_scale = 1.0;  // F0
  double perturbation = 0.0;  // max |offset| in percentage points

  double band_min() const noexcept { return base - perturbation; }
  double band_max() const noexcept { return base + gain + perturbation; }
};

AccuracyCalibration accuracy_calibration(SpaceKind kind);

/// base + gain * (1 - exp(-flops / F0)) + hash-seeded offset. Depends only on
/// the architecture.
double accuracy_oracle(const Architecture& arch);

}  // namespace cosearch
