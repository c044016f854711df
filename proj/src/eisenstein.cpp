#include "hermzeta/eisenstein.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "hermzeta/euler_products.hpp"

namespace hermzeta {

namespace {

void require_k_j(unsigned k, int j) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (j != 0 && j != 1) throw std::invalid_argument("j must be 0 or 1");
}

void require_negative(const FundamentalDiscriminant& D) {
  if (D.value() >= 0) throw std::invalid_argument("D must be a negative fundamental discriminant");
}

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }  // (-1)^e for e >= -1

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer abs_pow(std::int64_t v, unsigned e) { return ipow(Integer(v < 0 ? -v : v), e); }

// r^{w/2} for a rational r that is a perfect square.
Rational sqrt_power(const Rational& r, unsigned w) {
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  if (num < 0 || !mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    throw std::logic_error("sqrt_power: " + to_string(r) + " is not a rational square");
  }
  Integer num_root;
  Integer den_root;
  mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
  return rpow(make_rational(num_root, den_root), static_cast<int>(w));
}

QExpansion empty_expansion(unsigned weight, std::int64_t level, std::int64_t character_disc,
                           std::size_t precision) {
  QExpansion out;
  out.weight = weight;
  out.level = level;
  out.character_disc = character_disc;
  out.coefficients.assign(precision + 1, Rational(0));
  return out;
}

}  // namespace

QExpansion eisenstein_expansion(const QuadraticCharacter& chi1, const QuadraticCharacter& chi2,
                                unsigned weight, std::size_t precision) {
  if (weight < 3) throw std::invalid_argument("eisenstein_expansion: weight must be >= 3");
  QExpansion out = empty_expansion(weight, chi1.modulus() * chi2.modulus(),
                                   chi1.discriminant() * chi2.discriminant(), precision);
  if (chi2.is_trivial()) {
    out.coefficients[0] = L_nonpositive(chi1, 1 - static_cast<int>(weight)) / 2;
  }
  for (std::size_t n = 1; n <= precision; ++n) {
    out.coefficients[n] = sigma(chi1, chi2, weight - 1, static_cast<std::int64_t>(n));
  }
  return out;
}

QExpansion EisensteinCombination::expand(std::size_t precision) const {
  QExpansion out = empty_expansion(weight, level, character_disc, precision);
  for (const auto& term : terms) {
    if (term.coefficient == 0) continue;
    const QExpansion e = eisenstein_expansion(term.chi1, term.chi2, weight, precision);
    for (std::size_t n = 0; n <= precision; ++n) {
      out.coefficients[n] += term.coefficient * e.coefficients[n];
    }
  }
  return out;
}

EisensteinCombination f_side_combination(unsigned k, const FundamentalDiscriminant& D, int j) {
  require_k_j(k, j);
  require_negative(D);
  EisensteinCombination out{2 * k + 1, D.abs(), D.value(), {}};
  const Integer scale = abs_pow(D.value(), 2 * k);
  for (const auto& pair : enumerate_splitting_pairs(D)) {
    const QuadraticCharacter chi1(pair.d1);
    const QuadraticCharacter chi2(pair.d2);
    const Rational coeff =
        make_rational(-chi2(sign_pow(j - 1)) * abs_pow(pair.d2.value(), 2 * k), scale);
    out.terms.push_back({coeff, chi1, chi2});
  }
  return out;
}

EisensteinCombination g_side_combination(unsigned k, const FundamentalDiscriminant& D, int j) {
  require_k_j(k, j);
  require_negative(D);
  EisensteinCombination out{2 * k + 1, D.abs(), D.value(), {}};
  const Integer scale = abs_pow(D.value(), 2 * k);
  for (const auto& pair : enumerate_splitting_pairs(D)) {
    const QuadraticCharacter chi1(pair.d1);
    const QuadraticCharacter chi2(pair.d2);
    const Rational coeff = make_rational(-chi2(sign_pow(j)) * abs_pow(pair.d2.value(), 2 * k),
                                         scale * abs_pow(pair.d1.value(), 2 * k + 1));
    out.terms.push_back({coeff, chi2, chi1});
  }
  return out;
}

EisensteinCombination fricke_transport(const EisensteinCombination& combination) {
  EisensteinCombination out{combination.weight, combination.level, combination.character_disc, {}};
  const auto level = Integer(combination.level);
  for (const auto& term : combination.terms) {
    const std::int64_t n1 = term.chi1.modulus();
    const std::int64_t n2 = term.chi2.modulus();
    if (n1 * n2 != combination.level) {
      throw std::logic_error("fricke_transport: term level does not match combination level");
    }
    // chi2(-1) (N2/N1)^{w/2} from the involution, N^{-w/2} from the rescaling.
    const Rational factor =
        term.chi2(-1) * sqrt_power(make_rational(Integer(n2), Integer(n1) * level), combination.weight);
    out.terms.push_back({term.coefficient * factor, term.chi2, term.chi1});
  }
  return out;
}

SymbolicConstant zeta_even(unsigned k, std::int64_t abs_disc) {
  if (k < 1) throw std::invalid_argument("zeta_even: k must be >= 1");
  const Rational r = sign_pow(static_cast<int>(k) + 1) * bernoulli(2 * k) * ipow(Integer(2), 2 * k) /
                     (2 * factorial(2 * k));
  return SymbolicConstant(r, static_cast<int>(2 * k), 0, abs_disc);
}

SymbolicConstant l_value_odd(unsigned k, const FundamentalDiscriminant& D) {
  require_negative(D);
  const QuadraticCharacter chi(D);
  // (2k)! (-1)^k L(chi, 2k+1) = (g(chi)/2i) (2 pi / |D|)^{2k+1} L(chi, -2k), g(chi)/2i = sqrt|D|/2.
  const Rational l_neg = L_nonpositive(chi, -static_cast<int>(2 * k));
  const Rational r = sign_pow(static_cast<int>(k)) * ipow(Integer(2), 2 * k + 1) * l_neg /
                     (2 * abs_pow(D.value(), 2 * k + 1) * factorial(2 * k));
  return SymbolicConstant(r, static_cast<int>(2 * k + 1), 1, D.abs());
}

SymbolicConstant c_constant_direct(unsigned k, const FundamentalDiscriminant& D) {
  require_negative(D);
  const QuadraticCharacter chi(D);
  const Rational l_neg = L_nonpositive(chi, -static_cast<int>(2 * k));
  if (l_neg == 0) throw std::logic_error("c_constant_direct: L(chi_D, -2k) vanishes");
  const Rational r = 2 * sign_pow(static_cast<int>(k) + 1) * factorial(2 * k) /
                     (ipow(Integer(2), 2 * k + 1) * l_neg);
  const SymbolicConstant rest(r, -static_cast<int>(2 * k + 1), 1, D.abs());
  return rest * zeta_even(k, D.abs());
}

SymbolicConstant c_constant_via_functional_equation(unsigned k, const FundamentalDiscriminant& D) {
  require_negative(D);
  const SymbolicConstant abs_d_power =
      SymbolicConstant::rational(Rational(abs_pow(D.value(), 2 * k)), D.abs());
  return -(zeta_even(k, D.abs()) / (abs_d_power * l_value_odd(k, D)));
}

SymbolicConstant C_symbolic(unsigned k, const FundamentalDiscriminant& D) {
  const SymbolicConstant direct = c_constant_direct(k, D);
  if (direct != c_constant_via_functional_equation(k, D)) {
    throw std::logic_error("C_symbolic: the two forms of C disagree for D = " + std::to_string(D.value()));
  }
  return direct;
}

SymbolicConstant normalization_factor(unsigned k, const FundamentalDiscriminant& D) {
  return l_value_odd(k, D) / zeta_even(k, D.abs());
}

Rational f_constant_from_definition(unsigned k, const FundamentalDiscriminant& D) {
  require_negative(D);
  const Rational r = make_rational(sign_pow(static_cast<int>(k) + 1) * factorial(2 * k), ipow(Integer(2), 2 * k + 1));
  const SymbolicConstant c = SymbolicConstant(r, -static_cast<int>(2 * k + 1), 1, D.abs()) *
                             zeta_even(k, D.abs()) * normalization_factor(k, D);
  if (!c.is_rational()) throw std::logic_error("f_constant_from_definition: not rational");
  return c.rational_part();
}

Rational g_constant_from_definition(unsigned k, const FundamentalDiscriminant& D, int j) {
  require_k_j(k, j);
  require_negative(D);
  const Rational r =
      make_rational(sign_pow(j + static_cast<int>(k) + 1) * factorial(2 * k), ipow(Integer(2), 2 * k + 1));
  const SymbolicConstant c =
      SymbolicConstant(r, -static_cast<int>(2 * k + 1), 1 + 4 * static_cast<int>(k), D.abs()) *
      zeta_even(k, D.abs()) * normalization_factor(k, D);
  if (!c.is_rational()) throw std::logic_error("g_constant_from_definition: not rational");
  return c.rational_part();
}

QExpansion F_expansion(unsigned k, const FundamentalDiscriminant& D, int j, std::size_t precision) {
  require_k_j(k, j);
  require_negative(D);
  QExpansion out = empty_expansion(2 * k + 1, D.abs(), D.value(), precision);
  const QuadraticCharacter chi(D);
  out.coefficients[0] = -L_nonpositive(chi, -static_cast<int>(2 * k)) / (2 * abs_pow(D.value(), 2 * k));
  const int sign = sign_pow(j);
  for (std::size_t n = 1; n <= precision; ++n) {
    const auto delta = static_cast<std::int64_t>(n);
    out.coefficients[n] = sign * ipow(Integer(delta), 2 * k) * theta(sign * delta, D, 2 * k);
  }
  return out;
}

QExpansion eisenstein_combination(unsigned k, const FundamentalDiscriminant& D, int j,
                                  std::size_t precision) {
  return f_side_combination(k, D, j).expand(precision);
}

QExpansion g_combination(unsigned k, const FundamentalDiscriminant& D, int j, std::size_t precision) {
  return g_side_combination(k, D, j).expand(precision);
}

bool fricke_check(unsigned k, const FundamentalDiscriminant& D, int j, std::size_t precision) {
  const EisensteinCombination direct = g_side_combination(k, D, j);
  const EisensteinCombination transported = fricke_transport(f_side_combination(k, D, j));
  if (direct.terms != transported.terms) return false;
  return direct.expand(precision) == transported.expand(precision);
}

SymbolicConstant special_value_Z(std::int64_t delta, int j, const FundamentalDiscriminant& D,
                                 unsigned k) {
  require_k_j(k, j);
  if (delta < 1) throw std::invalid_argument("special_value_Z: delta must be >= 1");
  Rational sum = 0;
  for (const auto& pair : enumerate_splitting_pairs(D)) {
    const QuadraticCharacter chi1(pair.d1);
    const QuadraticCharacter chi2(pair.d2);
    sum += chi2(sign_pow(j - 1)) * abs_pow(pair.d2.value(), 2 * k) * sigma(chi1, chi2, 2 * k, delta);
  }
  const Rational scale = make_rational(Integer(sign_pow(j)), ipow(Integer(delta), 2 * k));
  return C_symbolic(k, D) * (sum * scale);
}

SymbolicConstant special_value_Z_star(std::int64_t delta, int j, const FundamentalDiscriminant& D,
                                      unsigned k) {
  require_k_j(k, j);
  if (delta < 1) throw std::invalid_argument("special_value_Z_star: delta must be >= 1");
  Rational sum = 0;
  for (const auto& pair : enumerate_splitting_pairs(D)) {
    const QuadraticCharacter chi1(pair.d1);
    const QuadraticCharacter chi2(pair.d2);
    sum += make_rational(chi2(sign_pow(j)) * abs_pow(pair.d2.value(), 2 * k),
                         abs_pow(pair.d1.value(), 2 * k + 1)) *
           sigma(chi2, chi1, 2 * k, delta);
  }
  return C_symbolic(k, D) * (sum / ipow(Integer(delta), 2 * k));
}

SymbolicConstant special_value_Z_via_theta(std::int64_t delta, int j,
                                           const FundamentalDiscriminant& D, unsigned k) {
  require_k_j(k, j);
  if (delta < 1) throw std::invalid_argument("special_value_Z_via_theta: delta must be >= 1");
  const Rational th = theta(sign_pow(j) * delta, D, 2 * k);
  return (zeta_even(k, D.abs()) / l_value_odd(k, D)) * th;
}

TheoremReport verify_main_theorem(unsigned k, const FundamentalDiscriminant& D, int j,
                                  std::size_t precision) {
  TheoremReport report{k, D.value(), j, precision, {}, 0, {}};
  const QExpansion lhs = F_expansion(k, D, j, precision);
  const QExpansion rhs = eisenstein_combination(k, D, j, precision);
  for (std::size_t n = 0; n <= precision; ++n) {
    const bool coprime = n >= 1 && std::gcd(static_cast<std::int64_t>(n), 2 * D.value()) == 1;
    if (coprime) ++report.coprime_indices_checked;
    if (lhs.coefficients[n] == rhs.coefficients[n]) continue;
    CoefficientMismatch mismatch{n, lhs.coefficients[n], rhs.coefficients[n]};
    if (coprime) report.coprime_mismatches.push_back(mismatch);
    report.mismatches.push_back(std::move(mismatch));
  }
  return report;
}

}  // namespace hermzeta
