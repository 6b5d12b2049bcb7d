// SPDX-License-Identifier: Apache-2.0
//
// The experiment commands behind the CLI. Each writes its files into the
// bundle directory and refreshes the manifest.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cosearch/accel_model.hpp"
#include "cosearch/arch_space.hpp"
#include "cosearch/harness/bundle.hpp"
#include "cosearch/harness/config.hpp"
#include "cosearch/perf_table.hpp"
#include "cosearch/search.hpp"

namespace cosearch::harness {

struct RunOptions {
  unsigned threads = 1;
  std::optional<std::string> output_dir;  // overrides the config's
};

/// Sampled spaces and resolved selectors for one config.
struct Experiment {
  ExperimentConfig config;
  ArchSpaceSample space;
  HwSpaceSample hw;  // after the support filter, when enabled
  std::size_t proxy = 0;
  std::size_t target = 0;
};

/// Throws ConfigError when the proxy or target index falls outside the
/// (filtered) hardware sample.
Experiment prepare(const ExperimentConfig& config);

/// Loads perf_table.csv when the bundle already holds it for this config,
/// otherwise computes and persists it (with accelerators.csv and
/// architectures.csv).
PerfTable ensure_table(const Experiment& exp, Bundle& bundle, unsigned threads);

/// Quantile budgets are resolved by nearest rank on the target's column.
std::vector<DesignConstraints> resolve_constraints(const Experiment& exp, const PerfTable& table);

void cmd_table(const ExperimentConfig& config, const RunOptions& options);
void cmd_srcc(const ExperimentConfig& config, const RunOptions& options);
/// SRCC outputs for a table CSV produced elsewhere (no config, no manifest).
void cmd_srcc_from_table(const std::string& table_path, const std::string& output_dir,
                         unsigned threads);
void cmd_stage1(const ExperimentConfig& config, const RunOptions& options);
void cmd_codesign(const ExperimentConfig& config, const RunOptions& options);
void cmd_mixed(const ExperimentConfig& config, const RunOptions& options);
/// Summarizes whatever the bundle holds into report.md / report.json and
/// returns the markdown.
std::string cmd_report(const ExperimentConfig& config, const RunOptions& options);

}  // namespace cosearch::harness
