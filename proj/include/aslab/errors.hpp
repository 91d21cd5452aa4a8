#pragma once

#include <stdexcept>
#include <string>

namespace aslab {

// Bad input: wrong ranges, mismatched fields, violated preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the evaluation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed (miscount, no height stabilization, ...).
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aslab
