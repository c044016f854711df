#pragma once

// Real quadratic Dirichlet characters and twisted divisor sums.

#include <cstdint>

#include "hermzeta/discriminants.hpp"
#include "hermzeta/exact_arith.hpp"

namespace hermzeta {

/// chi_d(n) = kronecker(d, n) for a fundamental discriminant d. The modulus-1
/// character (d = 1) is 1 on every integer, 0 and negatives included.
class QuadraticCharacter {
 public:
  explicit QuadraticCharacter(const FundamentalDiscriminant& d) : disc_(d.value()) {}
  explicit QuadraticCharacter(std::int64_t d) : QuadraticCharacter(FundamentalDiscriminant(d)) {}

  static QuadraticCharacter trivial() { return QuadraticCharacter(1); }

  std::int64_t discriminant() const { return disc_; }
  std::int64_t modulus() const { return disc_ < 0 ? -disc_ : disc_; }
  bool is_trivial() const { return disc_ == 1; }

  int operator()(std::int64_t n) const { return disc_ == 1 ? 1 : kronecker(disc_, n); }
  int operator()(const Integer& n) const {
    return disc_ == 1 ? 1 : kronecker(Integer(disc_), n);
  }

  friend bool operator==(const QuadraticCharacter&, const QuadraticCharacter&) = default;

 private:
  std::int64_t disc_;
};

/// sigma_t(chi1, chi2; n) = sum_{d | n, d > 0} chi1(d) chi2(n/d) d^t.
/// For n < 0 the cofactor n/d passed to chi2 is negative. Throws for n == 0.
Integer sigma(const QuadraticCharacter& chi1, const QuadraticCharacter& chi2, unsigned t,
              std::int64_t n);

/// sigma_{-s}(chi; n) = sum_{d | n, d > 0} chi(d) d^{-s}, exactly.
Rational sigma_negative(const QuadraticCharacter& chi, unsigned s, std::int64_t n);

/// |delta|^s sigma_{-s}(chi; delta) == chi(|delta|) sigma_s(chi; delta).
/// Requires gcd(modulus, delta) = 1 and delta != 0 (std::invalid_argument).
bool sigma_functional_check(const QuadraticCharacter& chi, unsigned s, std::int64_t delta);

}  // namespace hermzeta
