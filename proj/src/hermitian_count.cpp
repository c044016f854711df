#include "hermzeta/hermitian_count.hpp"

#include <stdexcept>
#include <string>

#include "hermzeta/characters.hpp"
#include "hermzeta/errors.hpp"
#include "hermzeta/euler_products.hpp"

namespace hermzeta {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

QuadraticIntegerRing::QuadraticIntegerRing(const FundamentalDiscriminant& D)
    : disc_(D), form_{1, D.value(), (D.value() * D.value() - D.value()) / 4} {
  if (D.value() >= 0) throw std::invalid_argument("QuadraticIntegerRing: D must be negative");
}

std::int64_t QuadraticIntegerRing::norm_mod(std::int64_t x, std::int64_t y, std::int64_t modulus) const {
  const std::int64_t xm = floor_mod(x, modulus);
  const std::int64_t ym = floor_mod(y, modulus);
  const std::int64_t bm = floor_mod(form_.b, modulus);
  const std::int64_t cm = floor_mod(form_.c, modulus);
  const std::int64_t v = (xm * xm % modulus + bm * xm % modulus * ym % modulus + cm * (ym * ym % modulus)) % modulus;
  return v;
}

std::uint64_t raw_norm_count(std::int64_t delta, std::int64_t modulus, const FundamentalDiscriminant& D) {
  if (modulus < 1) throw std::invalid_argument("raw_norm_count: modulus must be >= 1");
  const QuadraticIntegerRing ring(D);
  const std::int64_t target = floor_mod(delta, modulus);
  std::uint64_t count = 0;
  for (std::int64_t x = 0; x < modulus; ++x) {
    for (std::int64_t y = 0; y < modulus; ++y) {
      if (ring.norm_mod(x, y, modulus) == target) ++count;
    }
  }
  return count;
}

std::uint64_t r_count(std::int64_t delta, std::int64_t n, const FundamentalDiscriminant& D) {
  if (n < 1) throw std::invalid_argument("r_count: n must be >= 1");
  return raw_norm_count(delta, n, D);
}

std::uint64_t r_star_count(std::int64_t delta, std::int64_t n, const FundamentalDiscriminant& D) {
  if (n < 1) throw std::invalid_argument("r_star_count: n must be >= 1");
  const auto abs_d = static_cast<std::uint64_t>(D.abs());
  const std::uint64_t raw = raw_norm_count(delta, n * D.abs(), D);
  if (raw % abs_d != 0) {
    throw InterpretationError("r_star_count: raw count " + std::to_string(raw) + " for delta = " +
                              std::to_string(delta) + ", n = " + std::to_string(n) +
                              " is not divisible by |D| = " + std::to_string(abs_d));
  }
  return raw / abs_d;
}

DirichletCoefficients theta_dirichlet_coeffs(std::int64_t delta, const FundamentalDiscriminant& D,
                                             std::size_t length) {
  if (delta == 0) throw std::invalid_argument("theta_dirichlet_coeffs: delta must be nonzero");
  std::vector<std::int64_t> primes = prime_divisors(D.value());
  for (std::int64_t p : prime_divisors(delta)) {
    if (D.value() % p != 0) primes.push_back(p);
  }

  DirichletCoefficients acc = DirichletCoefficients::identity(length);
  for (std::int64_t p : primes) {
    const auto factor = euler_factor(delta, p, D);
    DirichletCoefficients next(length);
    for (std::size_t m = 1; m <= length; ++m) {
      if (acc[m] == 0) continue;
      std::size_t index = m;
      Integer p_power = 1;
      for (const Integer& coeff : factor.coefficients) {
        if (index > length) break;
        if (coeff != 0) next[index] += acc[m] * make_rational(coeff, p_power);
        index *= static_cast<std::size_t>(p);
        p_power *= p;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<Integer> egm_coefficient_oracle(std::int64_t delta, const FundamentalDiscriminant& D,
                                            std::size_t length) {
  const QuadraticCharacter chi(D);

  DirichletCoefficients zeta(length);
  DirichletCoefficients l_shifted(length);  // L(chi, s + 1) = sum chi(n)/n n^{-s}
  DirichletCoefficients l_plain(length);    // L(chi, s)
  for (std::size_t n = 1; n <= length; ++n) {
    const auto nn = static_cast<std::int64_t>(n);
    zeta[n] = 1;
    l_shifted[n] = make_rational(chi(nn), nn);
    l_plain[n] = chi(nn);
  }

  const DirichletCoefficients numerator = delta != 0
                                              ? dirichlet_mul(theta_dirichlet_coeffs(-delta, D, length), zeta)
                                              : dirichlet_mul(zeta, l_plain);
  const DirichletCoefficients series = dirichlet_mul(numerator, dirichlet_inv(l_shifted));

  std::vector<Integer> out(length + 1, Integer(0));
  for (std::size_t n = 1; n <= length; ++n) {
    const Rational value = series[n] * static_cast<unsigned long>(n);
    if (value.get_den() != 1 || value < 0) {
      throw IntegralityError("egm_coefficient_oracle: coefficient " + std::to_string(n) + " = " +
                             to_string(value) + " for delta = " + std::to_string(delta) +
                             ", D = " + std::to_string(D.value()) + " is not a non-negative integer");
    }
    out[n] = value.get_num();
  }
  return out;
}

}  // namespace hermzeta
