// SPDX-License-Identifier: Apache-2.0
//
// Result bundle on disk: every file is written to a temporary name and then
// renamed, so an interrupted run never leaves a torn file behind. The
// manifest records the config, its hash and the engine version.

#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cosearch/harness/config.hpp"

namespace cosearch::harness {

std::string_view engine_version();

/// Streams content through `write` into `path.tmp`, then renames over `path`.
/// Throws std::runtime_error when the directory is not writable.
void write_atomic(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& write);
void write_atomic(const std::filesystem::path& path, const std::string& content);

class Bundle {
 public:
  /// Creates the directory if needed. An existing manifest from a different
  /// config is discarded with a warning.
  Bundle(std::filesystem::path dir, const ExperimentConfig& config);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path(const std::string& name) const { return dir_ / name; }

  /// True when `name` was produced by this same config (per the manifest) and
  /// is still on disk.
  bool has_current(const std::string& name) const;

  void write(const std::string& name, const std::function<void(std::ostream&)>& write);
  void write_json(const std::string& name, const nlohmann::json& j);

  /// Rewrites manifest.json with every file produced so far.
  void commit();

  const nlohmann::json& manifest() const noexcept { return manifest_; }

 private:
  std::filesystem::path dir_;
  nlohmann::json manifest_;
};

}  // namespace cosearch::harness
