#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperlab {

enum class ErrorCode {
  incompatible_field,
  invalid_argument,
  reducible_modulus,
  undefined_resultant,
  undefined_discriminant,
  invalid_prime,
  no_convergence,
  insufficient_precision,
  unsupported_characteristic,
  inseparable_polynomial,
  reducible_polynomial,
  unnormalized_input,
  degree_mismatch,
  not_a_subgroup,
  missing_multiplication,
  degenerate_line,
  excluded_field,
  dimension,
  too_large,
  structural,
  usage,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can switch on the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperlab
