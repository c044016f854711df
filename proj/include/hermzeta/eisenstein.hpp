#pragma once

// Eisenstein series with quadratic characters, the rational generating
// series of the special values theta((-1)^j delta, 2k), and the identities
// tying the two together.
//
// Everything stored here is the rational-coefficient ("normalized") object:
// the transcendental generating functions differ from them by the factor
// zeta(2k) / L(chi_D, 2k + 1), carried separately as a SymbolicConstant.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hermzeta/characters.hpp"
#include "hermzeta/discriminants.hpp"
#include "hermzeta/exact_arith.hpp"
#include "hermzeta/symbolic.hpp"

namespace hermzeta {

/// Truncated q-expansion a_0 + a_1 q + ... + a_N q^N.
struct QExpansion {
  unsigned weight = 0;
  std::int64_t level = 1;
  std::int64_t character_disc = 1;
  std::vector<Rational> coefficients;

  std::size_t precision() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }

  friend bool operator==(const QExpansion&, const QExpansion&) = default;
};

/// E_w(chi1, chi2) = [chi2 trivial] L(chi1, 1 - w)/2 + sum_{n >= 1} sigma_{w-1}(chi1, chi2; n) q^n.
/// chi1 must come from a fundamental discriminant (primitive); w >= 3.
QExpansion eisenstein_expansion(const QuadraticCharacter& chi1, const QuadraticCharacter& chi2,
                                unsigned weight, std::size_t precision);

/// coefficient * E_w(chi1, chi2).
struct EisensteinTerm {
  Rational coefficient;
  QuadraticCharacter chi1;
  QuadraticCharacter chi2;

  friend bool operator==(const EisensteinTerm&, const EisensteinTerm&) = default;
};

struct EisensteinCombination {
  unsigned weight;
  std::int64_t level;
  std::int64_t character_disc;
  std::vector<EisensteinTerm> terms;

  QExpansion expand(std::size_t precision) const;
};

/// -|D|^{-2k} sum_{(D1, D2)} |D2|^{2k} chi_{D2}((-1)^{j-1}) E_{2k+1}(chi_{D1}, chi_{D2}).
EisensteinCombination f_side_combination(unsigned k, const FundamentalDiscriminant& D, int j);

/// -|D|^{-2k} sum_{(D1, D2)} |D2|^{2k} chi_{D2}((-1)^j) |D1|^{-(2k+1)} E_{2k+1}(chi_{D2}, chi_{D1}).
EisensteinCombination g_side_combination(unsigned k, const FundamentalDiscriminant& D, int j);

/// Applies the Fricke rule
///   E_w(chi1, chi2) | W_N = chi2(-1) (N2/N1)^{w/2} E_w(chi2, chi1)   (real characters)
/// to every term and rescales by N^{-w/2}.
EisensteinCombination fricke_transport(const EisensteinCombination& combination);

/// zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!).
SymbolicConstant zeta_even(unsigned k, std::int64_t abs_disc);

/// L(chi_D, 2k + 1) from L(chi_D, -2k) through the functional equation with
/// Gauss sum i sqrt|D| and conductor |D|.
SymbolicConstant l_value_odd(unsigned k, const FundamentalDiscriminant& D);

/// 2 (-1)^{k+1} |D|^{1/2} zeta(2k) (2k)! / ((2 pi)^{2k+1} L(chi_D, -2k)).
SymbolicConstant c_constant_direct(unsigned k, const FundamentalDiscriminant& D);

/// -zeta(2k) / (|D|^{2k} L(chi_D, 2k + 1)).
SymbolicConstant c_constant_via_functional_equation(unsigned k, const FundamentalDiscriminant& D);

/// c_constant_direct, after asserting it equals the functional-equation form
/// (std::logic_error otherwise).
SymbolicConstant C_symbolic(unsigned k, const FundamentalDiscriminant& D);

/// L(chi_D, 2k + 1) / zeta(2k): the factor turning the transcendental
/// generating functions into the rational ones.
SymbolicConstant normalization_factor(unsigned k, const FundamentalDiscriminant& D);

/// Constant term of the normalized f-series computed from its transcendental
/// definition (-1)^{k+1} |D|^{1/2} zeta(2k) (2k)! / (2 pi)^{2k+1} times the
/// normalization factor. Must be rational.
Rational f_constant_from_definition(unsigned k, const FundamentalDiscriminant& D);

/// Same for the g-series constant (-1)^{j+k+1} |D|^{1/2+2k} zeta(2k) (2k)! / (2 pi)^{2k+1}.
Rational g_constant_from_definition(unsigned k, const FundamentalDiscriminant& D, int j);

/// a_0 = -L(chi_D, -2k) / (2 |D|^{2k}), a_n = (-1)^j n^{2k} theta((-1)^j n, 2k).
QExpansion F_expansion(unsigned k, const FundamentalDiscriminant& D, int j, std::size_t precision);

QExpansion eisenstein_combination(unsigned k, const FundamentalDiscriminant& D, int j,
                                  std::size_t precision);
QExpansion g_combination(unsigned k, const FundamentalDiscriminant& D, int j, std::size_t precision);

/// g_combination equals the Fricke transport of the f-side combination, both
/// as term lists and as expansions to `precision`.
bool fricke_check(unsigned k, const FundamentalDiscriminant& D, int j, std::size_t precision);

/// Z((-1)^{j-1} delta, 2k) from the divisor-sum formula:
///   (-1)^j delta^{2k} Z = C_{k,D} sum |D2|^{2k} chi_{D2}((-1)^{j-1}) sigma_{2k}(chi_{D1}, chi_{D2}; delta).
SymbolicConstant special_value_Z(std::int64_t delta, int j, const FundamentalDiscriminant& D,
                                 unsigned k);

/// Z*((-1)^{j-1} delta, 2k) from
///   delta^{2k} Z* = C_{k,D} sum |D2|^{2k} chi_{D2}((-1)^j) |D1|^{-(2k+1)} sigma_{2k}(chi_{D2}, chi_{D1}; delta).
SymbolicConstant special_value_Z_star(std::int64_t delta, int j, const FundamentalDiscriminant& D,
                                      unsigned k);

/// Z((-1)^{j-1} delta, 2k) = theta((-1)^j delta, 2k) zeta(2k) / L(chi_D, 2k + 1).
SymbolicConstant special_value_Z_via_theta(std::int64_t delta, int j,
                                           const FundamentalDiscriminant& D, unsigned k);

struct CoefficientMismatch {
  std::size_t index;
  Rational expected;  // F_expansion
  Rational actual;    // eisenstein_combination
};

struct TheoremReport {
  unsigned k;
  std::int64_t D;
  int j;
  std::size_t precision;
  std::vector<CoefficientMismatch> mismatches;
  std::size_t coprime_indices_checked = 0;  // indices n >= 1 with gcd(n, 2D) = 1
  std::vector<CoefficientMismatch> coprime_mismatches;

  bool passed() const { return mismatches.empty(); }
  bool coprime_passed() const { return coprime_mismatches.empty(); }
};

/// Compares F_expansion against eisenstein_combination for indices 0..precision.
TheoremReport verify_main_theorem(unsigned k, const FundamentalDiscriminant& D, int j,
                                  std::size_t precision);

}  // namespace hermzeta
