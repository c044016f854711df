#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "hermzeta/characters.hpp"
#include "hermzeta/exact_arith.hpp"

using namespace hermzeta;

namespace {

int gmp_kronecker(std::int64_t a, std::int64_t n) {
  return mpz_kronecker(Integer(a).get_mpz_t(), Integer(n).get_mpz_t());
}

// Akiyama-Tanigawa: produces B_m with B_1 = +1/2.
std::vector<Rational> akiyama_tanigawa(unsigned max_index) {
  std::vector<Rational> out;
  std::vector<Rational> a(max_index + 1);
  for (unsigned m = 0; m <= max_index; ++m) {
    a[m] = make_rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
    }
    out.push_back(a[0]);
  }
  return out;
}

// Power series helpers, truncated after degree `order`.
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, std::size_t order) {
  Series c(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order && i < a.size(); ++i) {
    for (std::size_t j = 0; i + j <= order && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Series series_inv(const Series& a, std::size_t order) {
  Series b(order + 1, Rational(0));
  b[0] = 1 / a[0];
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= n && i < a.size(); ++i) acc += a[i] * b[n - i];
    b[n] = -acc / a[0];
  }
  return b;
}

Integer fact(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// B_{m,chi} read off sum_a chi(a) t e^{at} / (e^{ft} - 1) = sum_m B_{m,chi} t^m / m!.
Rational gen_bernoulli_by_series(const QuadraticCharacter& chi, unsigned m) {
  const std::int64_t f = chi.modulus();
  const std::size_t order = m + 1;
  // (e^{ft} - 1)/t = sum_n f^{n+1} t^n / (n+1)!
  Series denom(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    denom[n] = make_rational(ipow(Integer(f), static_cast<unsigned>(n + 1)), fact(static_cast<unsigned>(n + 1)));
  }
  const Series inv = series_inv(denom, order);
  Series total(order + 1, Rational(0));
  for (std::int64_t a = 1; a <= f; ++a) {
    const int c = chi(a);
    if (c == 0) continue;
    Series exp_at(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
      exp_at[n] = make_rational(ipow(Integer(a), static_cast<unsigned>(n)), fact(static_cast<unsigned>(n)));
    }
    const Series term = series_mul(inv, exp_at, order);
    for (std::size_t n = 0; n <= order; ++n) total[n] += c * term[n];
  }
  return total[m] * fact(m);
}

}  // namespace

TEST(Kronecker, SpecExamples) {
  for (std::int64_t d : {-3, -4, -7, 5, 8, 1}) EXPECT_EQ(kronecker(d, 1), 1);
  EXPECT_EQ(kronecker(-4, 2), 0);
  EXPECT_EQ(kronecker(-4, 3), -1);
}

TEST(Kronecker, MatchesGmpOnSmallGrid) {
  for (std::int64_t a = -60; a <= 60; ++a) {
    for (std::int64_t n = -60; n <= 60; ++n) {
      ASSERT_EQ(kronecker(a, n), gmp_kronecker(a, n)) << a << "/" << n;
    }
  }
}

TEST(Kronecker, MatchesGmpOnRandomLargeValues) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::int64_t> dist(-(std::int64_t{1} << 62), std::int64_t{1} << 62);
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t a = dist(rng);
    const std::int64_t n = dist(rng);
    ASSERT_EQ(kronecker(a, n), gmp_kronecker(a, n)) << a << "/" << n;
    const Integer big = Integer(a) * 1000003;
    ASSERT_EQ(kronecker(big, Integer(n)), mpz_kronecker(big.get_mpz_t(), Integer(n).get_mpz_t()));
  }
}

TEST(Kronecker, EulerCriterionForOddPrimes) {
  for (std::int64_t p : {3, 5, 7, 11, 13, 101, 997}) {
    for (std::int64_t a = -2 * p; a <= 2 * p; ++a) {
      Integer r;
      const Integer base((a % p + p) % p);
      mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), Integer(p).get_mpz_t());
      const int expected = r == 0 ? 0 : (r == 1 ? 1 : -1);
      ASSERT_EQ(kronecker(a, p), expected) << a << " mod " << p;
    }
  }
}

TEST(Kronecker, ExtremeValuesDoNotOverflow) {
  const std::int64_t lo = std::numeric_limits<std::int64_t>::min();
  EXPECT_EQ(kronecker(lo, 3), gmp_kronecker(lo, 3));
  EXPECT_EQ(kronecker(3, lo), gmp_kronecker(3, lo));
  EXPECT_EQ(kronecker(-1, 0), 1);
  EXPECT_EQ(kronecker(2, 0), 0);
}

TEST(Factorize, SpecExamples) {
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(12), (Factorization{{2, 2}, {3, 1}}));
  EXPECT_EQ(factorize(-15), (Factorization{{3, 1}, {5, 1}}));
  EXPECT_THROW(factorize(0), std::invalid_argument);
  EXPECT_THROW(factorize(kFactorizeLimit + 1), std::invalid_argument);
}

TEST(Factorize, ReconstructsInput) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(1, kFactorizeLimit);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t n = dist(rng);
    std::int64_t prod = 1;
    std::int64_t prev = 1;
    for (const auto& [p, e] : factorize(n)) {
      ASSERT_TRUE(is_prime(p));
      ASSERT_GT(p, prev);
      prev = p;
      for (int k = 0; k < e; ++k) prod *= p;
    }
    ASSERT_EQ(prod, n);
  }
}

TEST(Primes, MillerRabinMatchesGmp) {
  for (std::int64_t n = -5; n < 20000; ++n) {
    const bool gmp = n > 1 && mpz_probab_prime_p(Integer(n).get_mpz_t(), 40) != 0;
    ASSERT_EQ(is_prime(n), gmp) << n;
  }
  EXPECT_TRUE(is_prime(999999000001));
  EXPECT_FALSE(is_prime(3215031751));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Divisors, AndMoebius) {
  EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(-7), (std::vector<std::int64_t>{1, 7}));
  for (std::int64_t n = 1; n <= 500; ++n) {
    int sum = 0;
    for (auto d : divisors(n)) sum += moebius(d);
    ASSERT_EQ(sum, n == 1 ? 1 : 0) << n;
  }
  EXPECT_EQ(moebius(30), -1);
  EXPECT_EQ(moebius(18), 0);
}

TEST(Valuation, SpecExamples) {
  EXPECT_EQ(valuation(8, 2), (Valuation{3, 1}));
  EXPECT_EQ(valuation(5, 2), (Valuation{0, 5}));
  EXPECT_EQ(valuation(-12, 3), (Valuation{1, -4}));
  EXPECT_THROW(valuation(0, 2), std::invalid_argument);
}

TEST(Bernoulli, SpecExamples) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), make_rational(-1, 2));
  EXPECT_EQ(bernoulli(2), make_rational(1, 6));
  EXPECT_EQ(bernoulli(3), 0);
  EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
}

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
  const auto oracle = akiyama_tanigawa(40);
  const auto table = bernoulli_table(40);
  for (unsigned m = 0; m <= 40; ++m) {
    const Rational expected = m == 1 ? -oracle[1] : oracle[m];
    ASSERT_EQ(table[m], expected) << m;
  }
}

TEST(Bernoulli, PolynomialDifference) {
  // B_m(x + 1) - B_m(x) = m x^{m-1}
  for (unsigned m = 1; m <= 12; ++m) {
    for (int num = -3; num <= 3; ++num) {
      const Rational x = make_rational(num, 5);
      ASSERT_EQ(bernoulli_polynomial(m, x + 1) - bernoulli_polynomial(m, x), m * rpow(x, static_cast<int>(m - 1)));
    }
  }
}

TEST(GenBernoulli, SpecExamples) {
  EXPECT_EQ(gen_bernoulli(QuadraticCharacter::trivial(), 2), make_rational(1, 6));
  EXPECT_EQ(gen_bernoulli(QuadraticCharacter(-4), 1), make_rational(-1, 2));
  EXPECT_EQ(gen_bernoulli(QuadraticCharacter(-4), 3), make_rational(3, 2));
}

TEST(GenBernoulli, MatchesGeneratingFunction) {
  for (std::int64_t d : {-3, -4, -7, -8, -15, -24, 5, 8, 12, -20}) {
    const QuadraticCharacter chi(d);
    for (unsigned m = 0; m <= 9; ++m) {
      ASSERT_EQ(gen_bernoulli(chi, m), gen_bernoulli_by_series(chi, m)) << "d=" << d << " m=" << m;
    }
  }
}

TEST(LValues, SpecExamples) {
  EXPECT_EQ(L_nonpositive(QuadraticCharacter::trivial(), -1), make_rational(-1, 12));
  EXPECT_EQ(L_nonpositive(QuadraticCharacter::trivial(), 0), make_rational(-1, 2));
  EXPECT_EQ(L_nonpositive(QuadraticCharacter(-4), 0), make_rational(1, 2));
  EXPECT_EQ(L_nonpositive(QuadraticCharacter(-4), -2), make_rational(-1, 2));
  EXPECT_THROW(L_nonpositive(QuadraticCharacter(-4), 1), std::invalid_argument);
}

TEST(LValues, ClassNumberFormulaAtZero) {
  // L(chi_D, 0) = 2h/w; h counted from reduced forms of discriminant D.
  for (std::int64_t d : {-3, -4, -7, -8, -11, -15, -20, -23, -24, -35, -40, -47, -84, -71}) {
    int h = 0;
    for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
      for (std::int64_t b = -a + 1; b <= a; ++b) {
        if ((b * b - d) % (4 * a) != 0) continue;
        const std::int64_t c = (b * b - d) / (4 * a);
        if (c < a || (c == a && b < 0)) continue;
        if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
        ++h;
      }
    }
    const int w = d == -3 ? 6 : (d == -4 ? 4 : 2);
    ASSERT_EQ(L_nonpositive(QuadraticCharacter(d), 0), make_rational(2 * h, w)) << d;
  }
}

TEST(LValues, OddCharactersVanishAtEvenNonpositiveIntegers) {
  // B_{m,chi} = 0 for even m when chi is odd.
  for (std::int64_t d : {-3, -4, -7, -8}) {
    for (unsigned m = 2; m <= 10; m += 2) EXPECT_EQ(gen_bernoulli(QuadraticCharacter(d), m), 0);
  }
}
