#pragma once

#include <stdexcept>
#include <string>

namespace jscc {

/// Argument outside the mathematical domain of an operation (bad rate, rho,
/// probability, ...). Maps to CLI exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Base for numeric failures of otherwise valid inputs. Maps to exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bracket expansion or iterative search ran past its limit.
class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// A root equation has no sign change on its admissible bracket.
class NoRootError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// The expurgated exponent is zero at every rate, so no balance rate exists.
class NoPositiveExponentError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// A closed-form expression hit a pole or non-positive denominator.
class DegenerateError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace jscc
