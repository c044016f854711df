#pragma once

// Row kernels for residue histograms of a binary quadratic form.
//
// One row fixes the first variable; the kernel walks b = 0..modulus-1 and
// adds `weight` to histogram[(constant + linear*b + quadratic*b^2) mod modulus].
// The scalar kernel is the reference; vector variants must produce identical
// histograms and are chosen at runtime.

#include <cstdint>
#include <span>
#include <string_view>

namespace hermzeta::kernels {

/// Largest modulus the 32-bit lane arithmetic supports.
inline constexpr std::uint32_t kMaxRowModulus = 1U << 30;

struct RowParams {
  std::uint32_t modulus;    // 1 <= modulus <= kMaxRowModulus
  std::uint32_t constant;   // reduced mod modulus
  std::uint32_t linear;     // reduced mod modulus
  std::uint32_t quadratic;  // reduced mod modulus
};

enum class SimdLevel { kScalar, kAvx2 };

std::string_view to_string(SimdLevel level);

/// Whether this build and this CPU can run `level`.
bool simd_level_available(SimdLevel level);

/// Best available level, unless HERMZETA_SIMD=scalar|avx2 selects one.
SimdLevel detected_simd_level();

void accumulate_row_scalar(const RowParams& row, std::uint64_t weight,
                           std::span<std::uint64_t> histogram);

#if defined(HERMZETA_HAVE_AVX2_KERNEL)
void accumulate_row_avx2(const RowParams& row, std::uint64_t weight,
                         std::span<std::uint64_t> histogram);
#endif

/// Dispatches to the requested level; throws std::invalid_argument when the
/// level is unavailable, a coefficient is not reduced or the histogram is
/// shorter than the modulus.
void accumulate_row(const RowParams& row, std::uint64_t weight, std::span<std::uint64_t> histogram,
                    SimdLevel level);

}  // namespace hermzeta::kernels
