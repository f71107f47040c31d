#pragma once

#include <stdexcept>
#include <string>

namespace ualg {

  enum class ErrorCode {
    syntax,
    duplicate_symbol,
    negative_arity,
    unknown_symbol,
    arity_mismatch,
    unbound_variable,
    signature_mismatch,
    out_of_carrier,
    size_mismatch,
    size_cap_exceeded,
    not_a_congruence,
    not_a_group,
    mismatched_base,
    invalid_input
  };

  char const* to_string(ErrorCode code) noexcept;

  // All library failures are reported with this exception; code() is stable,
  // what() is for humans.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& message)
        : std::runtime_error(message), _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  [[noreturn]] void raise(ErrorCode code, std::string const& message);

}  // namespace ualg
