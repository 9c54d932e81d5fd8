#pragma once

#include <stdexcept>
#include <string>

namespace kks {

/// Stable status codes shared by the library, the C API and the CLI exit
/// status.
enum class Status : int {
  ok = 0,
  identity_failed = 1,
  input_error = 2,
  budget_exceeded = 3,
  internal_error = 4,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

/// Malformed text, violated precondition, or an argument outside a domain.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what)
      : Error(Status::input_error, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error(Status::budget_exceeded, what) {}
};

/// The expansion engine could not isolate a basis element.  Never expected;
/// indicates a bug.
class SolveFailure : public Error {
 public:
  explicit SolveFailure(const std::string& what)
      : Error(Status::internal_error, what) {}
};

}  // namespace kks
