#pragma once

#include "mlsp/simd/kernels.hpp"

namespace mlsp::simd::detail {

void pair_distances_scalar(const double* weights, std::size_t layers, std::size_t pairs,
                           Polarity polarity, double* out);
std::size_t admit_pairs_scalar(const double* dist, const std::int32_t* counts, std::size_t n,
                               std::int32_t alpha, double beta, std::uint8_t* admitted);
void min_plus_row_scalar(double* row, const double* via_row, double via, std::size_t n);

#if defined(MLSP_BUILD_AVX2)
void pair_distances_avx2(const double* weights, std::size_t layers, std::size_t pairs,
                         Polarity polarity, double* out);
std::size_t admit_pairs_avx2(const double* dist, const std::int32_t* counts, std::size_t n,
                             std::int32_t alpha, double beta, std::uint8_t* admitted);
void min_plus_row_avx2(double* row, const double* via_row, double via, std::size_t n);
#endif

#if defined(MLSP_BUILD_NEON)
void pair_distances_neon(const double* weights, std::size_t layers, std::size_t pairs,
                         Polarity polarity, double* out);
std::size_t admit_pairs_neon(const double* dist, const std::int32_t* counts, std::size_t n,
                             std::int32_t alpha, double beta, std::uint8_t* admitted);
void min_plus_row_neon(double* row, const double* via_row, double via, std::size_t n);
#endif

}  // namespace mlsp::simd::detail
