#pragma once

#include <cstdint>
#include <string>

#include "hermzeta/exact_arith.hpp"

namespace hermzeta {

/// rational * pi^pi_exponent * |D|^(sqrt_exponent / 2) for a fixed |D| > 0.
///
/// Canonical form: the rational part is reduced, sqrt_exponent is 0 or 1
/// (even powers of sqrt|D| are folded into the rational part) and zero has
/// both exponents 0.
class SymbolicConstant {
 public:
  SymbolicConstant(Rational rational, int pi_exponent, int sqrt_exponent, std::int64_t abs_disc);

  static SymbolicConstant rational(Rational value, std::int64_t abs_disc) {
    return SymbolicConstant(std::move(value), 0, 0, abs_disc);
  }

  const Rational& rational_part() const { return rational_; }
  int pi_exponent() const { return pi_exponent_; }
  int sqrt_abs_disc_exponent() const { return sqrt_exponent_; }
  std::int64_t abs_disc() const { return abs_disc_; }

  bool is_rational() const { return pi_exponent_ == 0 && sqrt_exponent_ == 0; }

  /// Value with pi to 50 digits, rounded to double.
  double to_double() const;
  std::string to_string() const;

  SymbolicConstant operator*(const SymbolicConstant& other) const;
  SymbolicConstant operator/(const SymbolicConstant& other) const;
  SymbolicConstant operator*(const Rational& factor) const;
  SymbolicConstant operator-() const;

  friend bool operator==(const SymbolicConstant&, const SymbolicConstant&) = default;

 private:
  void canonicalize();

  Rational rational_;
  int pi_exponent_;
  int sqrt_exponent_;
  std::int64_t abs_disc_;
};

/// pi to 50 significant decimal digits.
inline constexpr const char* kPi50 = "3.1415926535897932384626433832795028841971693993751";

}  // namespace hermzeta
