#pragma once

// Representation counts in the ring of integers O of Q(sqrt D) and the
// Dirichlet-series oracle for their generating zeta function.
//
//   r(delta, n)  = #{beta in O/nO : N(beta) = delta mod n}
//   r*(delta, n) = #{beta in O*/nO : |D| N(beta) = delta mod n|D|}
//
// With beta = gamma/sqrt(D), gamma in O, the second count becomes
// #{gamma mod n sqrt(D) O : N(gamma) = delta mod n|D|}; enumerating gamma
// mod n|D| O visits each such coset exactly |D| times.

#include <cstdint>
#include <vector>

#include "hermzeta/dirichlet_series.hpp"
#include "hermzeta/discriminants.hpp"
#include "hermzeta/exact_arith.hpp"

namespace hermzeta {

/// N(a + b w) = a^2 + D ab + ((D^2 - D)/4) b^2 for w = (D + sqrt D)/2.
struct NormForm {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
};

class QuadraticIntegerRing {
 public:
  /// D < 0 fundamental.
  explicit QuadraticIntegerRing(const FundamentalDiscriminant& D);

  const FundamentalDiscriminant& discriminant() const { return disc_; }
  const NormForm& norm_form() const { return form_; }

  /// N(x + y w) reduced into [0, modulus).
  std::int64_t norm_mod(std::int64_t x, std::int64_t y, std::int64_t modulus) const;

 private:
  FundamentalDiscriminant disc_;
  NormForm form_;
};

/// Direct enumeration over (Z/n)^2. n >= 1.
std::uint64_t r_count(std::int64_t delta, std::int64_t n, const FundamentalDiscriminant& D);

/// Enumeration over (Z/n|D|)^2 divided by |D|. Throws InterpretationError if
/// the raw count is not divisible by |D|.
std::uint64_t r_star_count(std::int64_t delta, std::int64_t n, const FundamentalDiscriminant& D);

/// Raw count #{(x, y) mod M : N(x + y w) = delta mod M}.
std::uint64_t raw_norm_count(std::int64_t delta, std::int64_t modulus, const FundamentalDiscriminant& D);

/// theta(delta, s) expanded as sum_m c_m m^{-s}, m <= length. Nonzero c_m only
/// for m supported on primes dividing D delta; c_{p^i} picks up p^{-i} from
/// the substitution X = p^{-1-s}.
DirichletCoefficients theta_dirichlet_coeffs(std::int64_t delta, const FundamentalDiscriminant& D,
                                             std::size_t length);

/// Predicted r(delta, n) for n = 1..length from the closed form
///   delta != 0: theta(-delta, s) zeta(s) / L(chi_D, s + 1)
///   delta == 0: zeta_K(s) / L(chi_D, s + 1)
/// read off as n * (coefficient of n^{-s}). Result index n holds r(delta, n);
/// index 0 is unused and zero. Throws IntegralityError if any value is not a
/// non-negative integer.
std::vector<Integer> egm_coefficient_oracle(std::int64_t delta, const FundamentalDiscriminant& D,
                                            std::size_t length);

}  // namespace hermzeta
