#include "biheyt/error.hpp"

namespace biheyt {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NotALattice: return "not-a-lattice";
    case ErrorKind::NotDistributive: return "not-distributive";
    case ErrorKind::ResiduationFailure: return "residuation-failure";
    case ErrorKind::DegenerateAlgebra: return "degenerate-algebra";
    case ErrorKind::InvalidCongruence: return "invalid-congruence";
    case ErrorKind::UnboundVariable: return "unbound-variable";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::VerificationFailure: return "verification-failure";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

}  // namespace biheyt
