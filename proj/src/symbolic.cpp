#include "hermzeta/symbolic.hpp"

#include <stdexcept>

namespace hermzeta {

SymbolicConstant::SymbolicConstant(Rational rational, int pi_exponent, int sqrt_exponent,
                                   std::int64_t abs_disc)
    : rational_(std::move(rational)),
      pi_exponent_(pi_exponent),
      sqrt_exponent_(sqrt_exponent),
      abs_disc_(abs_disc) {
  if (abs_disc <= 0) throw std::invalid_argument("SymbolicConstant: |D| must be positive");
  canonicalize();
}

void SymbolicConstant::canonicalize() {
  rational_.canonicalize();
  if (rational_ == 0) {
    pi_exponent_ = 0;
    sqrt_exponent_ = 0;
    return;
  }
  // sqrt_exponent = 2q + r with r in {0, 1}.
  int r = sqrt_exponent_ % 2;
  if (r < 0) r += 2;
  const int q = (sqrt_exponent_ - r) / 2;
  if (q != 0) rational_ *= rpow(Rational(Integer(abs_disc_)), q);
  sqrt_exponent_ = r;
}

double SymbolicConstant::to_double() const {
  constexpr unsigned kBits = 256;
  mpf_class pi(kPi50, kBits);
  mpf_class value(rational_, kBits);
  mpf_class pi_power(1, kBits);
  const unsigned abs_exp = static_cast<unsigned>(pi_exponent_ < 0 ? -pi_exponent_ : pi_exponent_);
  mpf_pow_ui(pi_power.get_mpf_t(), pi.get_mpf_t(), abs_exp);
  if (pi_exponent_ < 0) {
    value /= pi_power;
  } else {
    value *= pi_power;
  }
  if (sqrt_exponent_ == 1) {
    mpf_class root(0, kBits);
    mpf_sqrt_ui(root.get_mpf_t(), static_cast<unsigned long>(abs_disc_));
    value *= root;
  }
  return value.get_d();
}

std::string SymbolicConstant::to_string() const {
  std::string out = hermzeta::to_string(rational_);
  if (pi_exponent_ != 0) out += " * pi^" + std::to_string(pi_exponent_);
  if (sqrt_exponent_ != 0) out += " * sqrt(" + std::to_string(abs_disc_) + ")";
  return out;
}

SymbolicConstant SymbolicConstant::operator*(const SymbolicConstant& other) const {
  if (abs_disc_ != other.abs_disc_) throw std::invalid_argument("SymbolicConstant: |D| mismatch");
  return SymbolicConstant(rational_ * other.rational_, pi_exponent_ + other.pi_exponent_,
                          sqrt_exponent_ + other.sqrt_exponent_, abs_disc_);
}

SymbolicConstant SymbolicConstant::operator/(const SymbolicConstant& other) const {
  if (abs_disc_ != other.abs_disc_) throw std::invalid_argument("SymbolicConstant: |D| mismatch");
  if (other.rational_ == 0) throw std::domain_error("SymbolicConstant: division by zero");
  return SymbolicConstant(rational_ / other.rational_, pi_exponent_ - other.pi_exponent_,
                          sqrt_exponent_ - other.sqrt_exponent_, abs_disc_);
}

SymbolicConstant SymbolicConstant::operator*(const Rational& factor) const {
  return SymbolicConstant(rational_ * factor, pi_exponent_, sqrt_exponent_, abs_disc_);
}

SymbolicConstant SymbolicConstant::operator-() const {
  return SymbolicConstant(-rational_, pi_exponent_, sqrt_exponent_, abs_disc_);
}

}  // namespace hermzeta
