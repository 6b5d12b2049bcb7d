// SPDX-License-Identifier: Apache-2.0
//
// Declarative experiment configuration (one JSON file per experiment).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cosearch/accel_model.hpp"
#include "cosearch/arch_space.hpp"
#include "cosearch/common.hpp"

namespace cosearch::harness {

/// Thrown with every violation found, not just the first.
class ConfigError : public InvalidInputError {
 public:
  explicit ConfigError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Budgets are absolute or a nearest-rank quantile of the target's column.
/// A missing resource budget is permissive.
struct ConstraintSpec {
  std::optional<double> latency_budget;
  std::optional<double> latency_quantile;
  std::optional<double> energy_budget;
  std::optional<double> energy_quantile;
  std::optional<double> resource_budget;
};

struct ProxyIndex {
  std::size_t index = 0;
};
struct ProxyRandom {
  std::uint64_t seed = 0;
};
using ProxySelector = std::variant<ProxyIndex, ProxyRandom>;

struct LargestTarget {};  // highest hardware resource, lowest index on ties
using TargetSelector = std::variant<std::size_t, LargestTarget>;

struct MixedSettings {
  bool enabled = false;
  std::size_t plan_count = 5000;
  std::uint64_t plan_seed = 0;
  bool write_table = false;   // plan_count x archs rows; large at paper scale
  bool write_matrix = false;  // N x N SRCC matrices; always written up to 1000 plans
};

struct ExperimentConfig {
  SpaceKind space_kind = SpaceKind::cell;
  std::uint64_t space_seed = 0;
  std::size_t num_archs = 0;

  std::uint64_t hw_seed = 0;
  std::size_t per_dataflow = 0;
  std::vector<Dataflow> dataflows;
  bool filter_unsupported = true;

  ProxySelector proxy = ProxyIndex{};
  TargetSelector target = LargestTarget{};
  std::size_t k = 20;
  std::vector<ConstraintSpec> constraints;
  bool sweep_all_proxies = true;

  MixedSettings mixed;
  std::string output_dir;
};

/// Validates the whole document; throws ConfigError listing all violations.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

nlohmann::json to_json(const ExperimentConfig& config);

/// Hex FNV-1a of the canonical JSON, output_dir excluded (it does not affect
/// results).
std::string config_hash(const ExperimentConfig& config);

}  // namespace cosearch::harness
