// SPDX-License-Identifier: Apache-2.0
//
// Spearman rank correlation (average ranks for ties, Pearson on ranks) and
// the pairwise accelerator SRCC matrices built from a performance table.

#pragma once

#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "cosearch/perf_table.hpp"

namespace cosearch {

/// 1-based ranks; tied values share the average of their positions.
/// Throws InvalidInputError on empty input or non-finite values.
std::vector<double> ranks(std::span<const double> values);

/// Throws DegenerateInputError on length mismatch, n < 3, or a constant input.
double srcc(std::span<const double> x, std::span<const double> y);

/// Marks matrix entries whose SRCC is undefined (constant column).
inline constexpr double kSrccHole = std::numeric_limits<double>::quiet_NaN();
inline bool is_hole(double v) { return std::isnan(v); }

struct SrccMatrix {
  Metric metric = Metric::latency;
  std::vector<std::string> accel_ids;
  std::vector<double> values;  // row-major N x N

  std::size_t size() const noexcept { return accel_ids.size(); }
  double at(std::size_t i, std::size_t j) const { return values[i * size() + j]; }
  /// Indices of accelerators whose column was constant.
  std::vector<std::size_t> degenerate;
};

/// Columns of `table` are accelerators. Needs at least 3 architectures.
SrccMatrix srcc_matrix(const PerfTable& table, Metric metric,
                       std::vector<std::string> accel_ids = {}, unsigned threads = 1);

/// Mean of each accelerator's off-diagonal entries, holes skipped. Accelerators
/// with no defined entry get kSrccHole.
std::vector<double> average_srcc(const SrccMatrix& matrix);

struct CdfPoint {
  double value = 0;
  double cumulative = 0;
};

/// Empirical CDF of the per-accelerator average SRCC: distinct values in
/// ascending order with the fraction of accelerators at or below each.
std::vector<CdfPoint> avg_srcc_cdf(const SrccMatrix& matrix);

/// Same, from averages directly (holes skipped).
std::vector<CdfPoint> srcc_cdf(std::span<const double> averages);

struct SrccAverages {
  Metric metric = Metric::latency;
  std::vector<double> values;
  std::vector<std::size_t> degenerate;
};

/// average_srcc(srcc_matrix(table, metric)) without holding the N x N matrix;
/// for wide tables such as thousands of mixed plans. Results are identical.
SrccAverages average_srcc_streaming(const PerfTable& table, Metric metric, unsigned threads = 1);

void write_srcc_matrix_csv(const SrccMatrix& matrix, std::ostream& out);
void write_cdf_csv(std::span<const CdfPoint> cdf, std::ostream& out);

}  // namespace cosearch
