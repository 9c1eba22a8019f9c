#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernel_impls.hpp"

namespace mlsp::simd {

std::string_view to_string(Level level) noexcept {
  switch (level) {
    case Level::kScalar: return "scalar";
    case Level::kAvx2: return "avx2";
    case Level::kNeon: return "neon";
  }
  return "unknown";
}

namespace {

constexpr KernelTable kScalar{Level::kScalar, &detail::pair_distances_scalar,
                              &detail::admit_pairs_scalar, &detail::min_plus_row_scalar};
#if defined(MLSP_BUILD_AVX2)
constexpr KernelTable kAvx2{Level::kAvx2, &detail::pair_distances_avx2,
                            &detail::admit_pairs_avx2, &detail::min_plus_row_avx2};
#endif
#if defined(MLSP_BUILD_NEON)
constexpr KernelTable kNeon{Level::kNeon, &detail::pair_distances_neon,
                            &detail::admit_pairs_neon, &detail::min_plus_row_neon};
#endif

bool cpu_has(Level level) {
  switch (level) {
    case Level::kScalar: return true;
    case Level::kAvx2:
#if defined(MLSP_BUILD_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Level::kNeon:
#if defined(MLSP_BUILD_NEON)
      return true;  // baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& select() {
  if (const char* forced = std::getenv("MLSP_SIMD"); forced && std::string(forced) == "scalar") {
    return kScalar;
  }
  const auto levels = available_levels();
  return kernels_for(levels.back());
}

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

std::vector<Level> available_levels() {
  std::vector<Level> out{Level::kScalar};
  for (Level level : {Level::kAvx2, Level::kNeon}) {
    if (cpu_has(level)) out.push_back(level);
  }
  return out;
}

const KernelTable& kernels_for(Level level) {
  if (!cpu_has(level)) {
    throw std::invalid_argument("SIMD level " + std::string(to_string(level)) + " not available");
  }
  switch (level) {
#if defined(MLSP_BUILD_AVX2)
    case Level::kAvx2: return kAvx2;
#endif
#if defined(MLSP_BUILD_NEON)
    case Level::kNeon: return kNeon;
#endif
    default: return kScalar;
  }
}

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

void pair_distances(std::span<const double> weights, std::size_t layers, Polarity polarity,
                    std::span<double> out) {
  if (out.empty()) return;
  active_kernels().pair_distances(weights.data(), layers, out.size(), polarity, out.data());
}

std::size_t admit_pairs(std::span<const double> dist, std::span<const std::int32_t> counts,
                        std::int32_t alpha, double beta, std::span<std::uint8_t> admitted) {
  return active_kernels().admit_pairs(dist.data(), counts.data(), dist.size(), alpha, beta,
                                      admitted.empty() ? nullptr : admitted.data());
}

}  // namespace mlsp::simd
