#pragma once

#include <stdexcept>
#include <string>

namespace magneton {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map families of failures onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation exactly at a pole (zeta at s = 1, Gamma at 0, -1, -2, ...).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// |Im s| above the height the zeta evaluator is configured for.
class WindowError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Request would exceed a configured memory budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An iterative numeric procedure ran out of budget before meeting tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A reported truncation bound exceeds the ceiling the caller asked for.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Closed-form query inside the critical strip while running in
// outside-strip-only mode.
class ModeError : public Error {
 public:
  using Error::Error;
};

// Two-sided derivative requested at a point where the field jumps.
class JumpPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Root finder was handed an interval without a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

}  // namespace magneton
