// Built with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "kernel_impls.hpp"

namespace mlsp::simd::detail {

void pair_distances_avx2(const double* weights, std::size_t layers, std::size_t pairs,
                         Polarity polarity, double* out) {
  const __m256d count = _mm256_set1_pd(static_cast<double>(layers));
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t p = 0;
  for (; p + 4 <= pairs; p += 4) {
    __m256d sum = zero;
    for (std::size_t l = 0; l < layers; ++l) {
      sum = _mm256_add_pd(sum, _mm256_loadu_pd(weights + l * pairs + p));
    }
    const __m256d mean = _mm256_div_pd(sum, count);
    __m256d d;
    if (polarity == Polarity::kPositive) {
      d = _mm256_sub_pd(one, mean);
    } else {
      d = _mm256_min_pd(_mm256_max_pd(mean, zero), one);
    }
    _mm256_storeu_pd(out + p, d);
  }
  for (; p < pairs; ++p) {
    double sum = 0.0;
    for (std::size_t l = 0; l < layers; ++l) sum += weights[l * pairs + p];
    out[p] = distance_from_sum(sum, layers, polarity);
  }
}

std::size_t admit_pairs_avx2(const double* dist, const std::int32_t* counts, std::size_t n,
                             std::int32_t alpha, double beta, std::uint8_t* admitted) {
  const __m128i floor = _mm_set1_epi32(alpha - 1);
  const __m256d limit = _mm256_set1_pd(beta);
  std::size_t total = 0;
  std::size_t p = 0;
  for (; p + 4 <= n; p += 4) {
    const __m128i c = _mm_loadu_si128(reinterpret_cast<const __m128i*>(counts + p));
    const int count_bits = _mm_movemask_ps(_mm_castsi128_ps(_mm_cmpgt_epi32(c, floor)));
    const int dist_bits =
        _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(dist + p), limit, _CMP_LE_OQ));
    const unsigned bits = static_cast<unsigned>(count_bits & dist_bits);
    total += static_cast<std::size_t>(std::popcount(bits));
    if (admitted) {
      for (int k = 0; k < 4; ++k) admitted[p + k] = static_cast<std::uint8_t>(bits >> k & 1U);
    }
  }
  for (; p < n; ++p) {
    const bool ok = counts[p] >= alpha && dist[p] <= beta;
    if (admitted) admitted[p] = ok ? 1 : 0;
    total += ok ? 1 : 0;
  }
  return total;
}

void min_plus_row_avx2(double* row, const double* via_row, double via, std::size_t n) {
  const __m256d v = _mm256_set1_pd(via);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d candidate = _mm256_add_pd(v, _mm256_loadu_pd(via_row + j));
    // min_pd(a, b) yields a only when a < b, matching the scalar update.
    _mm256_storeu_pd(row + j, _mm256_min_pd(candidate, _mm256_loadu_pd(row + j)));
  }
  for (; j < n; ++j) {
    const double candidate = via + via_row[j];
    if (candidate < row[j]) row[j] = candidate;
  }
}

}  // namespace mlsp::simd::detail
