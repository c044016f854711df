#pragma once

#include <stdexcept>

namespace hermzeta {

/// The dual-lattice count over (Z/n|D|)^2 was not divisible by |D|, which
/// would mean the coset parametrization used for r* is wrong.
class InterpretationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Dirichlet-series expansion that must produce non-negative integers
/// produced something else.
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hermzeta
