#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hermzeta/kernels/residue_row.hpp"

namespace hermzeta::kernels {

std::string_view to_string(SimdLevel level) {
  switch (level) {
    case SimdLevel::kScalar:
      return "scalar";
    case SimdLevel::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool simd_level_available(SimdLevel level) {
  switch (level) {
    case SimdLevel::kScalar:
      return true;
    case SimdLevel::kAvx2:
#if defined(HERMZETA_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

SimdLevel detected_simd_level() {
  if (const char* forced = std::getenv("HERMZETA_SIMD")) {
    const std::string name(forced);
    if (name == "scalar") return SimdLevel::kScalar;
    if (name == "avx2" && simd_level_available(SimdLevel::kAvx2)) return SimdLevel::kAvx2;
  }
  return simd_level_available(SimdLevel::kAvx2) ? SimdLevel::kAvx2 : SimdLevel::kScalar;
}

void accumulate_row(const RowParams& row, std::uint64_t weight, std::span<std::uint64_t> histogram,
                    SimdLevel level) {
  if (row.modulus == 0 || row.modulus > kMaxRowModulus) {
    throw std::invalid_argument("accumulate_row: modulus out of range");
  }
  if (row.constant >= row.modulus || row.linear >= row.modulus || row.quadratic >= row.modulus) {
    throw std::invalid_argument("accumulate_row: coefficients must be reduced mod modulus");
  }
  if (histogram.size() < row.modulus) {
    throw std::invalid_argument("accumulate_row: histogram shorter than modulus");
  }
  if (!simd_level_available(level)) {
    throw std::invalid_argument("accumulate_row: SIMD level " + std::string(to_string(level)) +
                                " unavailable");
  }
  switch (level) {
    case SimdLevel::kScalar:
      accumulate_row_scalar(row, weight, histogram);
      return;
    case SimdLevel::kAvx2:
#if defined(HERMZETA_HAVE_AVX2_KERNEL)
      accumulate_row_avx2(row, weight, histogram);
#endif
      return;
  }
}

}  // namespace hermzeta::kernels
