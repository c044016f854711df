#pragma once

#include <cstddef>
#include <vector>

#include "hermzeta/exact_arith.hpp"

namespace hermzeta {

/// Truncated Dirichlet series sum_{n=1}^{N} c_n n^{-s} with exact coefficients.
class DirichletCoefficients {
 public:
  explicit DirichletCoefficients(std::size_t length) : coeffs_(length + 1, Rational(0)) {}

  /// (1, 0, 0, ...)
  static DirichletCoefficients identity(std::size_t length);

  std::size_t length() const { return coeffs_.size() - 1; }

  // 1-based.
  Rational& operator[](std::size_t n) { return coeffs_.at(n); }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }

  friend bool operator==(const DirichletCoefficients&, const DirichletCoefficients&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Dirichlet convolution; lengths must agree.
DirichletCoefficients dirichlet_mul(const DirichletCoefficients& a, const DirichletCoefficients& b);

/// Convolution inverse; throws std::invalid_argument when c_1 == 0.
DirichletCoefficients dirichlet_inv(const DirichletCoefficients& a);

}  // namespace hermzeta
