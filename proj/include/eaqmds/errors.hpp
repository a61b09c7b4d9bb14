#pragma once

#include <stdexcept>
#include <string>

namespace eaqmds {

/// Bad parameters supplied by the caller (maps to CLI exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction would exceed the exact-integer or enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algebraic identity the toolkit checks did not hold (CLI exit code 1).
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generator-polynomial coefficients did not lie in F_{q^2}.
class DescentFailure : public VerificationFailure {
 public:
  using VerificationFailure::VerificationFailure;
};

/// Combinatorial and rank ebit counts differ.
class OracleDisagreement : public VerificationFailure {
 public:
  using VerificationFailure::VerificationFailure;
};

}  // namespace eaqmds
