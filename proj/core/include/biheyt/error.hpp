#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biheyt {

enum class ErrorKind {
  InvalidArgument,
  NotALattice,
  NotDistributive,
  ResiduationFailure,
  DegenerateAlgebra,
  InvalidCongruence,
  UnboundVariable,
  Parse,
  BudgetExceeded,
  VerificationFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised whenever a bounded search is cut short. Callers must never read a
// truncated search as "nothing found".
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error(ErrorKind::BudgetExceeded, what) {}
};

}  // namespace biheyt
