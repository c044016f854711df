#include "hermzeta/dirichlet_series.hpp"

#include <stdexcept>

namespace hermzeta {

DirichletCoefficients DirichletCoefficients::identity(std::size_t length) {
  DirichletCoefficients out(length);
  if (length >= 1) out[1] = 1;
  return out;
}

DirichletCoefficients dirichlet_mul(const DirichletCoefficients& a, const DirichletCoefficients& b) {
  if (a.length() != b.length()) throw std::invalid_argument("dirichlet_mul: length mismatch");
  const std::size_t n_max = a.length();
  DirichletCoefficients out(n_max);
  for (std::size_t d = 1; d <= n_max; ++d) {
    if (a[d] == 0) continue;
    for (std::size_t e = 1; d * e <= n_max; ++e) {
      if (b[e] != 0) out[d * e] += a[d] * b[e];
    }
  }
  return out;
}

DirichletCoefficients dirichlet_inv(const DirichletCoefficients& a) {
  const std::size_t n_max = a.length();
  if (n_max == 0) return a;
  if (a[1] == 0) throw std::invalid_argument("dirichlet_inv: leading coefficient is zero");
  DirichletCoefficients inv(n_max);
  inv[1] = 1 / a[1];
  // Accumulate sum_{d | n, d > 1} a_d inv_{n/d} by sieving over multiples.
  std::vector<Rational> partial(n_max + 1, Rational(0));
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n > 1) inv[n] = -partial[n] / a[1];
    if (inv[n] == 0) continue;
    for (std::size_t d = 2; d * n <= n_max; ++d) {
      if (a[d] != 0) partial[d * n] += a[d] * inv[n];
    }
  }
  return inv;
}

}  // namespace hermzeta
