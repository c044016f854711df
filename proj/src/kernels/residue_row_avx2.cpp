#include <immintrin.h>

#include "hermzeta/kernels/residue_row.hpp"

namespace hermzeta::kernels {

namespace {

constexpr std::uint32_t kLanes = 8;

inline __m256i add_mod(__m256i x, __m256i y, __m256i m) {
  // Inputs are < m <= 2^30, so the sum cannot wrap; min_epu32 picks s - m
  // exactly when s >= m.
  const __m256i s = _mm256_add_epi32(x, y);
  return _mm256_min_epu32(s, _mm256_sub_epi32(s, m));
}

inline std::uint32_t eval(const RowParams& row, std::uint64_t b) {
  const std::uint64_t m = row.modulus;
  const std::uint64_t bm = b % m;
  const std::uint64_t quad = row.quadratic * (bm * bm % m) % m;
  return static_cast<std::uint32_t>((row.constant + row.linear * bm % m + quad) % m);
}

}  // namespace

void accumulate_row_avx2(const RowParams& row, std::uint64_t weight,
                         std::span<std::uint64_t> histogram) {
  const std::uint32_t m = row.modulus;
  std::uint64_t* hist = histogram.data();
  std::uint32_t b = 0;

  if (m >= 2 * kLanes) {
    alignas(32) std::uint32_t value_init[kLanes];
    alignas(32) std::uint32_t diff_init[kLanes];
    const std::uint64_t m64 = m;
    for (std::uint32_t i = 0; i < kLanes; ++i) {
      value_init[i] = eval(row, i);
      // f(b+8) - f(b) = 8*linear + quadratic*(16b + 64)
      diff_init[i] = static_cast<std::uint32_t>(
          (8 * static_cast<std::uint64_t>(row.linear) + row.quadratic * ((16 * i + 64) % m64)) % m64);
    }
    const auto step_scalar = static_cast<std::uint32_t>(128 * static_cast<std::uint64_t>(row.quadratic) % m64);

    const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
    const __m256i step = _mm256_set1_epi32(static_cast<int>(step_scalar));
    __m256i value = _mm256_load_si256(reinterpret_cast<const __m256i*>(value_init));
    __m256i diff = _mm256_load_si256(reinterpret_cast<const __m256i*>(diff_init));

    alignas(32) std::uint32_t lanes[kLanes];
    for (; b + kLanes <= m; b += kLanes) {
      _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), value);
      value = add_mod(value, diff, vm);
      diff = add_mod(diff, step, vm);
      hist[lanes[0]] += weight;
      hist[lanes[1]] += weight;
      hist[lanes[2]] += weight;
      hist[lanes[3]] += weight;
      hist[lanes[4]] += weight;
      hist[lanes[5]] += weight;
      hist[lanes[6]] += weight;
      hist[lanes[7]] += weight;
    }
  }

  for (; b < m; ++b) hist[eval(row, b)] += weight;
}

}  // namespace hermzeta::kernels
