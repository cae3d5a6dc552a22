#pragma once

#include <stdexcept>
#include <string>

namespace novikov {

enum class Errc {
  ring_mismatch,
  arity_mismatch,
  unknown_variable,
  parse_error,
  division_by_zero,
  invalid_ring,
  budget_exhausted,
  non_reduced,
  dimension_mismatch,
  index_out_of_range,
  jacobi_violation,
  not_antisymmetric,
  inconsistent_system,
  precondition,
  identity_exists,
  inverse_check_failed,
  symbolic_parameters,
  unsupported_dim,
  io_error,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ring_mismatch: return "ring-mismatch";
    case Errc::arity_mismatch: return "arity-mismatch";
    case Errc::unknown_variable: return "unknown-variable";
    case Errc::parse_error: return "parse-error";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::invalid_ring: return "invalid-ring";
    case Errc::budget_exhausted: return "budget-exhausted";
    case Errc::non_reduced: return "non-reduced";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::jacobi_violation: return "jacobi-violation";
    case Errc::not_antisymmetric: return "not-antisymmetric";
    case Errc::inconsistent_system: return "inconsistent-system";
    case Errc::precondition: return "precondition";
    case Errc::identity_exists: return "identity-exists";
    case Errc::inverse_check_failed: return "inverse-check-failed";
    case Errc::symbolic_parameters: return "symbolic-parameters";
    case Errc::unsupported_dim: return "unsupported-dim";
    case Errc::io_error: return "io-error";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace novikov
