#pragma once

// Exact scalar substrate: arbitrary-precision integers and rationals,
// factorization of machine-size integers, Kronecker symbols and
// (generalized) Bernoulli numbers.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hermzeta {

/// Arbitrary-precision integer. GMP keeps zero canonical.
using Integer = mpz_class;

/// Arbitrary-precision rational, always reduced with a positive denominator
/// as long as it is built through make_rational() or arithmetic.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Integer power; exp >= 0.
Integer ipow(const Integer& base, unsigned exp);
/// Rational power with a possibly negative exponent (base != 0 if exp < 0).
Rational rpow(const Rational& base, int exp);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Converts an Integer that is known to fit into int64; throws otherwise.
std::int64_t to_int64(const Integer& v);

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Ascending prime factorization of |n|.
using Factorization = std::vector<PrimePower>;

/// Largest |n| accepted by factorize(); trial division up to 10^6 covers it.
inline constexpr std::int64_t kFactorizeLimit = 1'000'000'000'000;

/// Factorization of |n| by trial division; throws std::invalid_argument for
/// n == 0 or |n| > kFactorizeLimit. The sign of n is left to the caller.
Factorization factorize(std::int64_t n);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::int64_t n);

/// Distinct primes dividing n (n != 0), ascending.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// Positive divisors of |n|, ascending. n != 0.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Moebius function, n >= 1.
int moebius(std::int64_t n);

struct Valuation {
  int exponent;        // t with p^t || n
  std::int64_t unit;   // n / p^t, sign preserved

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// p-adic valuation of n != 0 for a prime p.
Valuation valuation(std::int64_t n, std::int64_t p);

/// Kronecker symbol (a/n), total on all integer pairs:
/// (a/0) = [|a| == 1], (a/-1) = -1 iff a < 0, (a/2) = 0 for even a and
/// +-1 by a mod 8 otherwise.
int kronecker(std::int64_t a, std::int64_t n);
int kronecker(const Integer& a, const Integer& n);

/// Bernoulli numbers of the first kind (B_1 = -1/2), indices 0..max_index.
std::vector<Rational> bernoulli_table(unsigned max_index);
Rational bernoulli(unsigned m);

/// Bernoulli polynomial B_m(x).
Rational bernoulli_polynomial(unsigned m, const Rational& x);

class QuadraticCharacter;

/// B_{m,chi} = f^{m-1} sum_{a=1}^{f} chi(a) B_m(a/f), f the modulus of chi.
/// For the modulus-1 character this returns B_m (first-kind convention).
Rational gen_bernoulli(const QuadraticCharacter& chi, unsigned m);

/// L(chi, s) at s = 1 - m <= 0, i.e. -B_{m,chi}/m. For the trivial character
/// this is zeta(1 - m), with zeta(0) = -1/2.
Rational L_nonpositive(const QuadraticCharacter& chi, int s);

}  // namespace hermzeta
