#include "hermzeta/discriminants.hpp"

#include <stdexcept>
#include <string>

#include "hermzeta/exact_arith.hpp"

namespace hermzeta {

namespace {

bool squarefree(std::int64_t m) {
  if (m == 0) return false;
  for (const auto& pp : factorize(m)) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Empty string when d is fundamental, otherwise the violated condition.
std::string fundamental_violation(std::int64_t d) {
  if (d == 1) return {};
  if (d == 0) return "0 is not a discriminant";
  const std::int64_t r = floor_mod(d, 4);
  if (r == 1) {
    if (!squarefree(d)) return std::to_string(d) + " = 1 mod 4 but is not squarefree";
    return {};
  }
  if (r == 0) {
    const std::int64_t m = d / 4;
    const std::int64_t mr = floor_mod(m, 4);
    if (mr != 2 && mr != 3) {
      return std::to_string(d) + " = 4m with m = " + std::to_string(mr) + " mod 4 (need 2 or 3)";
    }
    if (!squarefree(m)) return std::to_string(d) + " = 4m with m not squarefree";
    return {};
  }
  return std::to_string(d) + " is " + std::to_string(r) + " mod 4 (need 0 or 1)";
}

}  // namespace

bool is_fundamental(std::int64_t d) {
  if (d < -kFactorizeLimit || d > kFactorizeLimit) return false;
  return fundamental_violation(d).empty();
}

FundamentalDiscriminant::FundamentalDiscriminant(std::int64_t value) : value_(value) {
  if (value < -kFactorizeLimit || value > kFactorizeLimit) {
    throw std::invalid_argument("discriminant " + std::to_string(value) + " out of supported range");
  }
  if (auto why = fundamental_violation(value); !why.empty()) {
    throw std::invalid_argument("not a fundamental discriminant: " + why);
  }
}

FundamentalDiscriminant negative_discriminant(std::int64_t d) {
  FundamentalDiscriminant D(d);
  if (D.value() >= 0) {
    throw std::invalid_argument("discriminant " + std::to_string(d) + " must be negative");
  }
  return D;
}

PrimeDiscriminant odd_prime_star(std::int64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("odd_prime_star: " + std::to_string(p) + " is not an odd prime");
  }
  return {p, p % 4 == 1 ? p : -p};
}

std::int64_t two_star(const FundamentalDiscriminant& D) {
  const std::int64_t d = D.value();
  std::int64_t by_table;
  if (d % 2 != 0) {
    by_table = 1;
  } else if (d % 8 != 0) {
    by_table = -4;
  } else {
    by_table = floor_mod(d / 8, 4) == 1 ? 8 : -8;
  }

  std::int64_t quotient = d;
  if (d != 1 && d != -1) {
    for (std::int64_t p : prime_divisors(d)) {
      if (p != 2) quotient /= odd_prime_star(p).star;
    }
  }
  if (quotient != by_table) {
    throw std::logic_error("two_star: case table and quotient disagree for D = " + std::to_string(d));
  }
  return by_table;
}

PrimeDiscriminant prime_star(std::int64_t p, const FundamentalDiscriminant& D) {
  if (D.value() % p != 0) {
    throw std::invalid_argument("prime_star: " + std::to_string(p) + " does not divide D");
  }
  if (p == 2) return {2, two_star(D)};
  return odd_prime_star(p);
}

std::vector<PrimeDiscriminant> prime_discriminants(const FundamentalDiscriminant& D) {
  std::vector<PrimeDiscriminant> out;
  if (D.value() == 1) return out;
  for (std::int64_t p : prime_divisors(D.value())) out.push_back(prime_star(p, D));
  return out;
}

std::vector<SplittingPair> enumerate_splitting_pairs(const FundamentalDiscriminant& D) {
  if (D.value() >= 0) throw std::invalid_argument("enumerate_splitting_pairs: D must be negative");
  const auto stars = prime_discriminants(D);
  const std::size_t count = std::size_t{1} << stars.size();
  std::vector<SplittingPair> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::int64_t d2 = 1;
    for (std::size_t i = 0; i < stars.size(); ++i) {
      if (mask >> i & 1U) d2 *= stars[i].star;
    }
    out.push_back({FundamentalDiscriminant(D.value() / d2), FundamentalDiscriminant(d2)});
  }
  return out;
}

bool chi_factorization_check(const FundamentalDiscriminant& D, std::int64_t n) {
  int product = 1;
  for (const auto& ps : prime_discriminants(D)) product *= kronecker(ps.star, n);
  return kronecker(D.value(), n) == product;
}

}  // namespace hermzeta
