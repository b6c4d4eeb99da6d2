#pragma once

#include <stdexcept>
#include <string>

namespace dtr {

// Division by an identically zero rational function or series coefficient.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A rational function that was required to be a Laurent polynomial was not.
// Raised when a final invariant fails to cancel its denominator.
class NonPolynomial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two series with different truncation orders or exponent grids were combined.
class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Series inversion or logarithm with an unusable constant term.
class NonInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation of a rational expression hit a pole.
class Pole : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A lattice enumeration did not stabilise within its search limit.
class NonTerminating : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied arguments outside an operation's domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed invariant broke a structural property (palindromicity,
// integrality, non-negativity, ...).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dtr
