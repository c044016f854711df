#include "hermzeta/characters.hpp"

#include <numeric>
#include <stdexcept>

namespace hermzeta {

Integer sigma(const QuadraticCharacter& chi1, const QuadraticCharacter& chi2, unsigned t,
              std::int64_t n) {
  if (n == 0) throw std::invalid_argument("sigma: n must be nonzero");
  Integer acc = 0;
  for (std::int64_t d : divisors(n)) {
    const int c = chi1(d) * chi2(n / d);
    if (c == 0) continue;
    const Integer term = ipow(Integer(d), t);
    if (c > 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

Rational sigma_negative(const QuadraticCharacter& chi, unsigned s, std::int64_t n) {
  if (n == 0) throw std::invalid_argument("sigma_negative: n must be nonzero");
  Rational acc = 0;
  for (std::int64_t d : divisors(n)) {
    const int c = chi(d);
    if (c != 0) acc += make_rational(Integer(c), ipow(Integer(d), s));
  }
  return acc;
}

bool sigma_functional_check(const QuadraticCharacter& chi, unsigned s, std::int64_t delta) {
  if (delta == 0) throw std::invalid_argument("sigma_functional_check: delta must be nonzero");
  if (std::gcd(chi.modulus(), delta) != 1) {
    throw std::invalid_argument("sigma_functional_check: delta must be coprime to the modulus");
  }
  const std::int64_t abs_delta = delta < 0 ? -delta : delta;
  const Rational lhs = Rational(ipow(Integer(abs_delta), s)) * sigma_negative(chi, s, delta);
  const Rational rhs = Rational(chi(abs_delta) * sigma(chi, QuadraticCharacter::trivial(), s, delta));
  return lhs == rhs;
}

}  // namespace hermzeta
