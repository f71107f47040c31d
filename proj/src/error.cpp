#include "ualg/error.hpp"

namespace ualg {

  char const* to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::syntax:
        return "SyntaxError";
      case ErrorCode::duplicate_symbol:
        return "DuplicateSymbol";
      case ErrorCode::negative_arity:
        return "NegativeArity";
      case ErrorCode::unknown_symbol:
        return "UnknownSymbol";
      case ErrorCode::arity_mismatch:
        return "ArityMismatch";
      case ErrorCode::unbound_variable:
        return "UnboundVariable";
      case ErrorCode::signature_mismatch:
        return "SignatureMismatch";
      case ErrorCode::out_of_carrier:
        return "OutOfCarrier";
      case ErrorCode::size_mismatch:
        return "SizeMismatch";
      case ErrorCode::size_cap_exceeded:
        return "SizeCapExceeded";
      case ErrorCode::not_a_congruence:
        return "NotACongruence";
      case ErrorCode::not_a_group:
        return "NotAGroup";
      case ErrorCode::mismatched_base:
        return "MismatchedBase";
      case ErrorCode::invalid_input:
        return "InvalidInput";
    }
    return "Error";
  }

  void raise(ErrorCode code, std::string const& message) {
    throw Error(code, std::string(to_string(code)) + ": " + message);
  }

}  // namespace ualg
