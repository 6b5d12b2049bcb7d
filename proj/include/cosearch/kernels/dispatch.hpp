// SPDX-License-Identifier: Apache-2.0
//
// Data-parallel inner loops with a scalar reference and an AVX2 variant,
// selected once at runtime. Every variant must produce bit-identical output;
// the inputs are integer-valued (or half-integer) doubles below 2^53, so the
// arithmetic is exact regardless of lane order.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace cosearch::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

bool cpu_supports(Isa isa) noexcept;

/// Best supported ISA unless overridden by force_isa() or the
/// COSEARCH_FORCE_SCALAR environment variable.
Isa active_isa() noexcept;

/// Pins the kernels to one ISA (tests use this to compare variants).
/// Passing std::nullopt restores automatic selection.
void force_isa(std::optional<Isa> isa);

/// Layer quantities that do not depend on the accelerator. All fields are
/// exact integers stored as doubles.
struct LayerTerms {
  double macs = 0;
  double kc_extent = 0;  // K * C (C = 1 for depthwise)
  double yr_extent = 0;  // Y' * R
  double x_extent = 0;   // X'
  double out_channels = 0;
  double kernel_rows = 0;
  double weight_bytes = 0;
  double output_bytes = 0;
  double offchip_bytes = 0;  // input + weight + output
};

/// Structure-of-arrays view over n accelerators. dataflow codes: 0 = KC-P,
/// 1 = YR-P, 2 = X-P.
struct AccelBatch {
  const double* pes = nullptr;
  const double* noc = nullptr;
  const double* offchip = nullptr;
  const double* dataflow = nullptr;
  std::size_t n = 0;
};

struct EnergyWeights {
  double mac;
  double scratchpad;
  double noc;
  double dram;
  double spad_per_mac;
};

/// latency[i] += layer latency on accelerator i; energy[i] += layer energy.
/// The layer must have macs > 0.
void accumulate_layer(const LayerTerms& layer, const AccelBatch& batch, const EnergyWeights& w,
                      double* latency, double* energy);

/// Centered cross moments of two rank vectors sharing the mean `mean`:
/// sum (a-m)(b-m), sum (a-m)^2, sum (b-m)^2.
struct RankMoments {
  double cross = 0;
  double aa = 0;
  double bb = 0;
};

RankMoments rank_moments(const double* a, const double* b, std::size_t n, double mean);

/// out[j] = sum_k a[k] * rows[j][k] for j < count, with `rows` laid out
/// row-major with stride `stride`. Used for blocks of an SRCC matrix over
/// pre-centered rank vectors.
void dot_many(const double* a, const double* rows, std::size_t stride, std::size_t count,
              std::size_t n, double* out);

namespace scalar {
void accumulate_layer(const LayerTerms& layer, const AccelBatch& batch, const EnergyWeights& w,
                      double* latency, double* energy);
RankMoments rank_moments(const double* a, const double* b, std::size_t n, double mean);
void dot_many(const double* a, const double* rows, std::size_t stride, std::size_t count,
              std::size_t n, double* out);
}  // namespace scalar

namespace avx2 {
void accumulate_layer(const LayerTerms& layer, const AccelBatch& batch, const EnergyWeights& w,
                      double* latency, double* energy);
RankMoments rank_moments(const double* a, const double* b, std::size_t n, double mean);
void dot_many(const double* a, const double* rows, std::size_t stride, std::size_t count,
              std::size_t n, double* out);
}  // namespace avx2

}  // namespace cosearch::kernels
