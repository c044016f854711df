#pragma once

// Local factors R_p(delta, X) and the finite Euler product
//   theta(delta, s) = prod_{p | D delta} R_p(delta, p^{-1-s}),
// together with the split theta = theta0 * theta1 for delta coprime to D.

#include <cstdint>
#include <vector>

#include "hermzeta/discriminants.hpp"
#include "hermzeta/exact_arith.hpp"

namespace hermzeta {

/// R_p(delta, X) as an integer polynomial, coefficients[i] multiplying X^i.
struct EulerFactorPolynomial {
  std::int64_t prime;
  std::vector<Integer> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Rational evaluate(const Rational& x) const;
  /// Value at X = p^{-1-s}.
  Rational evaluate_at_exponent(unsigned s) const;
};

/// R_p(delta, X) for a prime p and D < 0 fundamental. Throws for delta == 0.
///
/// With p^t || delta and delta0 = delta / p^t:
///   p !| D:        (1 - (chi_D(p) p X)^{t+1}) / (1 - chi_D(p) p X), expanded
///   p | D, p odd:  1 + (-|D/p|^t delta0 / p) (pX)^{t+1}
///   p = 2 | D:     keyed on halfDisc = D/4 mod 8, with
///                  oddComplement = -halfDisc/2      (halfDisc = 2 mod 4)
///                                = (1 - halfDisc)/2 (halfDisc = 3 mod 4):
///     2:    1 + (8  / delta0 oddComplement^t) (2X)^{t+3}
///     6:    1 - (-8 / delta0 oddComplement^t) (2X)^{t+3}
///     3, 7: 1 - (-4 / delta0 oddComplement^t) (2X)^{t+2}
EulerFactorPolynomial euler_factor(std::int64_t delta, std::int64_t p,
                                   const FundamentalDiscriminant& D);

/// theta(delta, s), exact. Throws for delta == 0.
Rational theta(std::int64_t delta, const FundamentalDiscriminant& D, unsigned s);

/// Product over p | D only. Requires gcd(delta, D) = 1.
Rational theta0(std::int64_t delta, const FundamentalDiscriminant& D, unsigned s);
/// Product over p | delta only. Requires gcd(delta, D) = 1.
Rational theta1(std::int64_t delta, const FundamentalDiscriminant& D, unsigned s);

/// 1 + sgn(p*) chi_{p*}(delta) |p*|^{-s}: the value of R_p(delta, p^{-1-s})
/// for p | D when delta is coprime to 2D.
Rational local_factor_closed_form(std::int64_t delta, std::int64_t p,
                                  const FundamentalDiscriminant& D, unsigned s);

/// chi_D(delta) (-1)^{j-1} |D|^{2k} theta0((-1)^j delta, 2k)
///   == sum_{(D1, D2)} chi_{D2}((-1)^{j-1} delta) |D2|^{2k}.
/// Requires delta > 0 coprime to 2D, k >= 1, j in {0, 1}.
bool theta0_charsum_check(std::int64_t delta, const FundamentalDiscriminant& D, unsigned k, int j);

}  // namespace hermzeta
