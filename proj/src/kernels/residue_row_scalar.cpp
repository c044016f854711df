#include "hermzeta/kernels/residue_row.hpp"

namespace hermzeta::kernels {

namespace {

inline std::uint32_t add_mod(std::uint32_t x, std::uint32_t y, std::uint32_t m) {
  const std::uint32_t s = x + y;
  return s >= m ? s - m : s;
}

}  // namespace

void accumulate_row_scalar(const RowParams& row, std::uint64_t weight,
                           std::span<std::uint64_t> histogram) {
  const std::uint32_t m = row.modulus;
  // f(b+1) - f(b) = linear + quadratic*(2b + 1); the difference steps by 2*quadratic.
  std::uint32_t value = row.constant;
  std::uint32_t diff = add_mod(row.linear, row.quadratic, m);
  const std::uint32_t step = add_mod(row.quadratic, row.quadratic, m);
  std::uint64_t* hist = histogram.data();
  for (std::uint32_t b = 0; b < m; ++b) {
    hist[value] += weight;
    value = add_mod(value, diff, m);
    diff = add_mod(diff, step, m);
  }
}

}  // namespace hermzeta::kernels
