#include "hermzeta/euler_products.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "hermzeta/characters.hpp"

namespace hermzeta {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void require_negative(const FundamentalDiscriminant& D) {
  if (D.value() >= 0) throw std::invalid_argument("euler products need D < 0");
}

// 1 + sign * p^e X^e.
EulerFactorPolynomial binomial_factor(std::int64_t p, int sign, int e) {
  EulerFactorPolynomial out{p, std::vector<Integer>(static_cast<std::size_t>(e) + 1, Integer(0))};
  out.coefficients[0] = 1;
  out.coefficients[static_cast<std::size_t>(e)] = sign * ipow(Integer(p), static_cast<unsigned>(e));
  if (sign == 0) out.coefficients.resize(1);
  return out;
}

}  // namespace

Rational EulerFactorPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational EulerFactorPolynomial::evaluate_at_exponent(unsigned s) const {
  return evaluate(make_rational(Integer(1), ipow(Integer(prime), s + 1)));
}

EulerFactorPolynomial euler_factor(std::int64_t delta, std::int64_t p,
                                   const FundamentalDiscriminant& D) {
  if (delta == 0) throw std::invalid_argument("euler_factor: delta must be nonzero");
  require_negative(D);
  const auto [t, delta0] = valuation(delta, p);
  const std::int64_t d = D.value();

  if (d % p != 0) {
    const int c = kronecker(d, p);
    EulerFactorPolynomial out{p, {}};
    out.coefficients.reserve(static_cast<std::size_t>(t) + 1);
    Integer term = 1;
    for (int i = 0; i <= t; ++i) {
      out.coefficients.push_back(term);
      term *= c * p;
    }
    while (out.coefficients.size() > 1 && out.coefficients.back() == 0) out.coefficients.pop_back();
    return out;
  }

  const auto tu = static_cast<unsigned>(t);
  if (p != 2) {
    const std::int64_t d0 = d / p;
    const Integer top = -ipow(Integer(d0 < 0 ? -d0 : d0), tu) * delta0;
    return binomial_factor(p, kronecker(top, Integer(p)), t + 1);
  }

  // p = 2 divides D, so 4 | D.
  const std::int64_t half_disc = d / 4;
  const std::int64_t odd_complement =
      floor_mod(half_disc, 4) == 2 ? -half_disc / 2 : (1 - half_disc) / 2;
  const Integer bottom = Integer(delta0) * ipow(Integer(odd_complement), tu);
  switch (floor_mod(half_disc, 8)) {
    case 2:
      return binomial_factor(2, kronecker(Integer(8), bottom), t + 3);
    case 6:
      return binomial_factor(2, -kronecker(Integer(-8), bottom), t + 3);
    case 3:
    case 7:
      return binomial_factor(2, -kronecker(Integer(-4), bottom), t + 2);
    default:
      throw std::logic_error("euler_factor: D/4 mod 8 outside {2,3,6,7} for D = " +
                             std::to_string(d));
  }
}

Rational theta(std::int64_t delta, const FundamentalDiscriminant& D, unsigned s) {
  if (delta == 0) throw std::invalid_argument("theta: delta must be nonzero");
  require_negative(D);
  // Distinct primes of D * delta without forming the product.
  std::vector<std::int64_t> primes = prime_divisors(D.value());
  for (std::int64_t p : prime_divisors(delta)) {
    if (D.value() % p != 0) primes.push_back(p);
  }
  Rational acc = 1;
  for (std::int64_t p : primes) acc *= euler_factor(delta, p, D).evaluate_at_exponent(s);
  return acc;
}

Rational theta0(std::int64_t delta, const FundamentalDiscriminant& D, unsigned s) {
  if (delta == 0 || std::gcd(delta, D.value()) != 1) {
    throw std::invalid_argument("theta0: delta must be nonzero and coprime to D");
  }
  require_negative(D);
  Rational acc = 1;
  for (std::int64_t p : prime_divisors(D.value())) {
    acc *= euler_factor(delta, p, D).evaluate_at_exponent(s);
  }
  return acc;
}

Rational theta1(std::int64_t delta, const FundamentalDiscriminant& D, unsigned s) {
  if (delta == 0 || std::gcd(delta, D.value()) != 1) {
    throw std::invalid_argument("theta1: delta must be nonzero and coprime to D");
  }
  require_negative(D);
  Rational acc = 1;
  for (std::int64_t p : prime_divisors(delta)) {
    acc *= euler_factor(delta, p, D).evaluate_at_exponent(s);
  }
  return acc;
}

Rational local_factor_closed_form(std::int64_t delta, std::int64_t p,
                                  const FundamentalDiscriminant& D, unsigned s) {
  const auto ps = prime_star(p, D);
  const int sign = ps.star > 0 ? 1 : -1;
  const std::int64_t abs_star = ps.star > 0 ? ps.star : -ps.star;
  const int c = sign * kronecker(ps.star, delta);
  return 1 + make_rational(Integer(c), ipow(Integer(abs_star), s));
}

bool theta0_charsum_check(std::int64_t delta, const FundamentalDiscriminant& D, unsigned k, int j) {
  if (delta <= 0 || std::gcd(delta, 2 * D.value()) != 1) {
    throw std::invalid_argument("theta0_charsum_check: delta must be positive and coprime to 2D");
  }
  if (k < 1 || (j != 0 && j != 1)) throw std::invalid_argument("theta0_charsum_check: bad k or j");
  const QuadraticCharacter chi_D(D);
  const int sign_jm1 = j == 1 ? 1 : -1;  // (-1)^{j-1}
  const int sign_j = -sign_jm1;          // (-1)^j

  const Rational lhs = chi_D(delta) * sign_jm1 * Rational(ipow(Integer(D.abs()), 2 * k)) *
                       theta0(sign_j * delta, D, 2 * k);

  Rational rhs = 0;
  for (const auto& pair : enumerate_splitting_pairs(D)) {
    const QuadraticCharacter chi2(pair.d2);
    rhs += chi2(sign_jm1 * delta) * ipow(Integer(pair.d2.abs()), 2 * k);
  }
  return lhs == rhs;
}

}  // namespace hermzeta
