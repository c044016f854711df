#include "hermzeta/exact_arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <type_traits>

#include "hermzeta/characters.hpp"

namespace hermzeta {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

Integer ipow(const Integer& base, unsigned exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational rpow(const Rational& base, int exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("rpow: zero to a negative power");
    return make_rational(ipow(base.get_den(), static_cast<unsigned>(-exp)),
                         ipow(base.get_num(), static_cast<unsigned>(-exp)));
  }
  return make_rational(ipow(base.get_num(), static_cast<unsigned>(exp)),
                       ipow(base.get_den(), static_cast<unsigned>(exp)));
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("to_int64: value out of range");
  return v.get_si();
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Generic Kronecker symbol; T is std::int64_t or Integer.
template <typename T>
bool is_even(const T& x) {
  if constexpr (std::is_same_v<T, Integer>) {
    return mpz_even_p(x.get_mpz_t()) != 0;
  } else {
    return (x & 1) == 0;
  }
}

template <typename T>
int mod8(const T& x) {
  if constexpr (std::is_same_v<T, Integer>) {
    return static_cast<int>(mpz_fdiv_ui(x.get_mpz_t(), 8));
  } else {
    return static_cast<int>(((x % 8) + 8) % 8);
  }
}

template <typename T>
T floor_mod(const T& a, const T& b) {
  T r = a % b;
  if (r < 0) r += b;
  return r;
}

template <typename T>
int kronecker_impl(T a, T n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (is_even(a) && is_even(n)) return 0;

  int result = 1;
  int twos = 0;
  while (is_even(n)) {
    n /= 2;
    ++twos;
  }
  if (twos % 2 == 1) {
    const int r = mod8(a);
    if (r == 3 || r == 5) result = -result;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }

  // n is odd and positive: Jacobi symbol.
  a = floor_mod(a, n);
  while (a != 0) {
    while (is_even(a)) {
      a /= 2;
      const int r = mod8(n);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (mod8(a) % 4 == 3 && mod8(n) % 4 == 3) result = -result;
    a = floor_mod(a, n);
  }
  return n == 1 ? result : 0;
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t n) {
  // Avoid overflow on negation of INT64_MIN.
  if (a == std::numeric_limits<std::int64_t>::min() || n == std::numeric_limits<std::int64_t>::min()) {
    return kronecker(Integer(static_cast<long>(a)), Integer(static_cast<long>(n)));
  }
  return kronecker_impl<std::int64_t>(a, n);
}

int kronecker(const Integer& a, const Integer& n) {
  if (a.fits_slong_p() && n.fits_slong_p()) {
    const long av = a.get_si();
    const long nv = n.get_si();
    if (av != std::numeric_limits<long>::min() && nv != std::numeric_limits<long>::min()) {
      return kronecker_impl<std::int64_t>(av, nv);
    }
  }
  return kronecker_impl<Integer>(a, n);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  const auto m = static_cast<std::uint64_t>(n);
  std::uint64_t d = m - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These witnesses are exact for all n < 3.3 * 10^24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
  if (n < -kFactorizeLimit || n > kFactorizeLimit) {
    throw std::invalid_argument("factorize: |n| exceeds " + std::to_string(kFactorizeLimit));
  }
  std::int64_t m = n < 0 ? -n : n;
  Factorization out;
  auto strip = [&](std::int64_t p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::int64_t p = 5; p * p <= m; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (m > 1) {
    // Any composite below kFactorizeLimit has a factor <= 10^6, so m is prime.
    if (!is_prime(m)) throw std::logic_error("factorize: leftover cofactor is not prime");
    out.push_back({m, 1});
  }
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int moebius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("moebius: n must be positive");
  int mu = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

Valuation valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
  if (!is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
  int t = 0;
  while (n % p == 0) {
    n /= p;
    ++t;
  }
  return {t, n};
}

std::vector<Rational> bernoulli_table(unsigned max_index) {
  std::vector<Rational> b(max_index + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= max_index; ++m) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, 0)
    for (unsigned j = 0; j < m; ++j) {
      acc += binom * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -acc / (m + 1);
    b[m].canonicalize();
  }
  return b;
}

Rational bernoulli(unsigned m) { return bernoulli_table(m)[m]; }

Rational bernoulli_polynomial(unsigned m, const Rational& x) {
  const auto b = bernoulli_table(m);
  Rational acc = 0;
  Integer binom = 1;  // C(m, i)
  for (unsigned i = 0; i <= m; ++i) {
    acc += binom * b[i] * rpow(x, static_cast<int>(m - i));
    binom = binom * (m - i) / (i + 1);
  }
  return acc;
}

Rational gen_bernoulli(const QuadraticCharacter& chi, unsigned m) {
  const std::int64_t f = chi.modulus();
  if (f == 1) return bernoulli(m);

  const auto b = bernoulli_table(m);
  Rational acc = 0;
  for (std::int64_t a = 1; a <= f; ++a) {
    const int c = chi(a);
    if (c == 0) continue;
    const Rational x = make_rational(a, f);
    Rational poly = 0;
    Integer binom = 1;
    for (unsigned i = 0; i <= m; ++i) {
      poly += binom * b[i] * rpow(x, static_cast<int>(m - i));
      binom = binom * (m - i) / (i + 1);
    }
    acc += c * poly;
  }
  Rational out = acc * rpow(Rational(static_cast<long>(f)), static_cast<int>(m) - 1);
  out.canonicalize();
  return out;
}

Rational L_nonpositive(const QuadraticCharacter& chi, int s) {
  if (s > 0) throw std::invalid_argument("L_nonpositive: s must be <= 0");
  const unsigned m = static_cast<unsigned>(1 - s);
  if (chi.modulus() == 1 && m == 1) return make_rational(-1, 2);
  Rational out = -gen_bernoulli(chi, m) / m;
  out.canonicalize();
  return out;
}

}  // namespace hermzeta
