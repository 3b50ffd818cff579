#pragma once

#include <stdexcept>
#include <string>

namespace cglq {

enum class errc {
  not_divisible,
  length_mismatch,
  zero_input,
  ambiguous_pivot,
  not_log_canonical,
  not_a_monomial,
  cross_check_failed,
  no_pivot,
  multiple_pivots,
  chain_identity_failed,
  support_violation,
  not_in_subalgebra,
  cap_exceeded,
  pivot_mismatch,
  coefficient_not_in_l,
  bad_epsilon,
  parse_error,
  schema_error,
  validation_failed,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_divisible: return "NotDivisible";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::zero_input: return "ZeroInput";
    case errc::ambiguous_pivot: return "AmbiguousPivot";
    case errc::not_log_canonical: return "NotLogCanonical";
    case errc::not_a_monomial: return "NotAMonomial";
    case errc::cross_check_failed: return "CrossCheckFailed";
    case errc::no_pivot: return "NoPivot";
    case errc::multiple_pivots: return "MultiplePivots";
    case errc::chain_identity_failed: return "ChainIdentityFailed";
    case errc::support_violation: return "SupportViolation";
    case errc::not_in_subalgebra: return "NotInSubalgebra";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::pivot_mismatch: return "PivotMismatch";
    case errc::coefficient_not_in_l: return "CoefficientNotInL";
    case errc::bad_epsilon: return "BadEpsilon";
    case errc::parse_error: return "ParseError";
    case errc::schema_error: return "SchemaError";
    case errc::validation_failed: return "ValidationFailed";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace cglq
