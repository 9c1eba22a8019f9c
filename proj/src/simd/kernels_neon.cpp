#include <arm_neon.h>

#include "kernel_impls.hpp"

namespace mlsp::simd::detail {

void pair_distances_neon(const double* weights, std::size_t layers, std::size_t pairs,
                         Polarity polarity, double* out) {
  const float64x2_t count = vdupq_n_f64(static_cast<double>(layers));
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t one = vdupq_n_f64(1.0);
  std::size_t p = 0;
  for (; p + 2 <= pairs; p += 2) {
    float64x2_t sum = zero;
    for (std::size_t l = 0; l < layers; ++l) sum = vaddq_f64(sum, vld1q_f64(weights + l * pairs + p));
    const float64x2_t mean = vdivq_f64(sum, count);
    float64x2_t d;
    if (polarity == Polarity::kPositive) {
      d = vsubq_f64(one, mean);
    } else {
      d = vminq_f64(vmaxq_f64(mean, zero), one);
    }
    vst1q_f64(out + p, d);
  }
  for (; p < pairs; ++p) {
    double sum = 0.0;
    for (std::size_t l = 0; l < layers; ++l) sum += weights[l * pairs + p];
    out[p] = distance_from_sum(sum, layers, polarity);
  }
}

std::size_t admit_pairs_neon(const double* dist, const std::int32_t* counts, std::size_t n,
                             std::int32_t alpha, double beta, std::uint8_t* admitted) {
  const int64x2_t floor = vdupq_n_s64(alpha);
  const float64x2_t limit = vdupq_n_f64(beta);
  std::size_t total = 0;
  std::size_t p = 0;
  for (; p + 2 <= n; p += 2) {
    const uint64x2_t count_ok = vcgeq_s64(vmovl_s32(vld1_s32(counts + p)), floor);
    const uint64x2_t dist_ok = vcleq_f64(vld1q_f64(dist + p), limit);
    const uint64x2_t both = vandq_u64(count_ok, dist_ok);
    const std::uint8_t a0 = vgetq_lane_u64(both, 0) ? 1 : 0;
    const std::uint8_t a1 = vgetq_lane_u64(both, 1) ? 1 : 0;
    total += a0 + a1;
    if (admitted) {
      admitted[p] = a0;
      admitted[p + 1] = a1;
    }
  }
  for (; p < n; ++p) {
    const bool ok = counts[p] >= alpha && dist[p] <= beta;
    if (admitted) admitted[p] = ok ? 1 : 0;
    total += ok ? 1 : 0;
  }
  return total;
}

void min_plus_row_neon(double* row, const double* via_row, double via, std::size_t n) {
  const float64x2_t v = vdupq_n_f64(via);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t candidate = vaddq_f64(v, vld1q_f64(via_row + j));
    const float64x2_t current = vld1q_f64(row + j);
    vst1q_f64(row + j, vbslq_f64(vcltq_f64(candidate, current), candidate, current));
  }
  for (; j < n; ++j) {
    const double candidate = via + via_row[j];
    if (candidate < row[j]) row[j] = candidate;
  }
}

}  // namespace mlsp::simd::detail
