#include "kernel_impls.hpp"

namespace mlsp::simd::detail {

void pair_distances_scalar(const double* weights, std::size_t layers, std::size_t pairs,
                           Polarity polarity, double* out) {
  for (std::size_t p = 0; p < pairs; ++p) {
    double sum = 0.0;
    for (std::size_t l = 0; l < layers; ++l) sum += weights[l * pairs + p];
    out[p] = distance_from_sum(sum, layers, polarity);
  }
}

std::size_t admit_pairs_scalar(const double* dist, const std::int32_t* counts, std::size_t n,
                               std::int32_t alpha, double beta, std::uint8_t* admitted) {
  std::size_t total = 0;
  for (std::size_t p = 0; p < n; ++p) {
    const bool ok = counts[p] >= alpha && dist[p] <= beta;
    if (admitted) admitted[p] = ok ? 1 : 0;
    total += ok ? 1 : 0;
  }
  return total;
}

void min_plus_row_scalar(double* row, const double* via_row, double via, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    const double candidate = via + via_row[j];
    if (candidate < row[j]) row[j] = candidate;
  }
}

}  // namespace mlsp::simd::detail
