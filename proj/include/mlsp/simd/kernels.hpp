#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mlsp/network.hpp"

namespace mlsp::simd {

enum class Level { kScalar, kAvx2, kNeon };

std::string_view to_string(Level level) noexcept;

/// Data-parallel inner loops. Every variant performs the same IEEE operations
/// in the same order per element as the scalar reference, so results are
/// bit-identical across levels (the build disables FP contraction).
struct KernelTable {
  Level level;

  /// out[p] = distance from the layer sum of pair p, summing layers in
  /// ascending order. `weights` is layer-major with `pairs` columns.
  void (*pair_distances)(const double* weights, std::size_t layers, std::size_t pairs,
                         Polarity polarity, double* out);

  /// admitted[p] = counts[p] >= alpha && dist[p] <= beta. Returns the number
  /// of admitted pairs. `admitted` may be null when only the count is wanted.
  std::size_t (*admit_pairs)(const double* dist, const std::int32_t* counts, std::size_t n,
                             std::int32_t alpha, double beta, std::uint8_t* admitted);

  /// row[j] = min(row[j], via + via_row[j]) for j in [0, n).
  void (*min_plus_row)(double* row, const double* via_row, double via, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;

/// Levels compiled into this binary and supported by the running CPU,
/// scalar first.
std::vector<Level> available_levels();

/// Throws std::invalid_argument for a level that is not available.
const KernelTable& kernels_for(Level level);

/// Best available level, chosen once per process. Setting MLSP_SIMD=scalar
/// in the environment forces the reference kernels.
const KernelTable& active_kernels();

/// Maps a layer-weight sum to a distance. Shared by the scalar kernel and the
/// per-pair on-demand path so both round identically.
inline double distance_from_sum(double sum, std::size_t layers, Polarity polarity) noexcept {
  const double mean = sum / static_cast<double>(layers);
  if (polarity == Polarity::kPositive) return 1.0 - mean;
  return mean < 0.0 ? 0.0 : (mean > 1.0 ? 1.0 : mean);
}

// Span conveniences over the active table.
void pair_distances(std::span<const double> weights, std::size_t layers, Polarity polarity,
                    std::span<double> out);
std::size_t admit_pairs(std::span<const double> dist, std::span<const std::int32_t> counts,
                        std::int32_t alpha, double beta, std::span<std::uint8_t> admitted);

}  // namespace mlsp::simd
