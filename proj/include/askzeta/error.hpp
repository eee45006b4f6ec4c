#pragma once

#include <stdexcept>
#include <string>

namespace askzeta {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An exact enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace askzeta
