#ifndef SPRKIT_ERRORS_HPP
#define SPRKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sprkit {

enum class ErrorKind {
  invalid_spec,
  malformed_payload,
  spec_mismatch,
  dim_mismatch,
  not_enumerable,
  invalid_bound,
  precondition_failed,
  internal_lemma_violation,
  derivation_violation,
  degree_too_large,
  non_terminating,
  invalid_rewrite_system,
  internal_violation,
  budget_exceeded,
  parse_error,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_spec: return "InvalidSpec";
    case ErrorKind::malformed_payload: return "MalformedPayload";
    case ErrorKind::spec_mismatch: return "SpecMismatch";
    case ErrorKind::dim_mismatch: return "DimMismatch";
    case ErrorKind::not_enumerable: return "NotEnumerable";
    case ErrorKind::invalid_bound: return "InvalidBound";
    case ErrorKind::precondition_failed: return "PreconditionFailed";
    case ErrorKind::internal_lemma_violation: return "InternalLemmaViolation";
    case ErrorKind::derivation_violation: return "DerivationViolation";
    case ErrorKind::degree_too_large: return "DegreeTooLarge";
    case ErrorKind::non_terminating: return "NonTerminating";
    case ErrorKind::invalid_rewrite_system: return "InvalidRewriteSystem";
    case ErrorKind::internal_violation: return "InternalViolation";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sprkit

#endif  // SPRKIT_ERRORS_HPP
