#pragma once

#include <stdexcept>
#include <string>

namespace taft {

// Input or invariant violation detected before any work is done.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConductorMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computation refused because its size exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace taft
