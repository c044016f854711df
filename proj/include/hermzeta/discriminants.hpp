#pragma once

// Fundamental discriminants, prime discriminants p* and the splitting
// pairs (D1, D2) with D1 * D2 = D, gcd(D1, D2) = 1.

#include <cstdint>
#include <vector>

namespace hermzeta {

/// True for 1, for squarefree d = 1 mod 4, and for d = 4m with m = 2, 3 mod 4
/// squarefree.
bool is_fundamental(std::int64_t d);

/// A validated fundamental discriminant (1 included).
class FundamentalDiscriminant {
 public:
  /// Throws std::invalid_argument naming the violated condition.
  explicit FundamentalDiscriminant(std::int64_t value);

  std::int64_t value() const { return value_; }
  std::int64_t abs() const { return value_ < 0 ? -value_ : value_; }

  friend bool operator==(const FundamentalDiscriminant&, const FundamentalDiscriminant&) = default;

 private:
  std::int64_t value_;
};

/// Requires a negative fundamental discriminant (the field discriminant of an
/// imaginary quadratic field); throws std::invalid_argument otherwise.
FundamentalDiscriminant negative_discriminant(std::int64_t d);

struct PrimeDiscriminant {
  std::int64_t prime;
  std::int64_t star;  // +-p for odd p; one of 1, -4, 8, -8 for p = 2

  friend bool operator==(const PrimeDiscriminant&, const PrimeDiscriminant&) = default;
};

struct SplittingPair {
  FundamentalDiscriminant d1;
  FundamentalDiscriminant d2;

  friend bool operator==(const SplittingPair&, const SplittingPair&) = default;
};

/// p* = (-1/p) p for an odd prime p; throws for p = 2 or composite p.
PrimeDiscriminant odd_prime_star(std::int64_t p);

/// The 2-part of D in its prime-discriminant factorization: 1, -4, 8 or -8.
std::int64_t two_star(const FundamentalDiscriminant& D);

/// p* for a prime p | D, using two_star(D) at p = 2.
PrimeDiscriminant prime_star(std::int64_t p, const FundamentalDiscriminant& D);

/// One prime discriminant per prime dividing D, ascending by prime.
std::vector<PrimeDiscriminant> prime_discriminants(const FundamentalDiscriminant& D);

/// All (D1, D2) with D1 D2 = D, gcd = 1, both fundamental. Pair number `mask`
/// puts into D2 the primes selected by the bits of mask (bit i = i-th smallest
/// prime), so the list starts with (D, 1) and ends with (1, D).
/// Throws std::invalid_argument unless D < 0.
std::vector<SplittingPair> enumerate_splitting_pairs(const FundamentalDiscriminant& D);

/// kronecker(D, n) == prod_{p | D} kronecker(p*, n).
bool chi_factorization_check(const FundamentalDiscriminant& D, std::int64_t n);

}  // namespace hermzeta
