#include "hyperlab/error.hpp"

namespace hyperlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::incompatible_field: return "incompatible-field";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::reducible_modulus: return "reducible-modulus";
    case ErrorCode::undefined_resultant: return "undefined-resultant";
    case ErrorCode::undefined_discriminant: return "undefined-discriminant";
    case ErrorCode::invalid_prime: return "invalid-prime";
    case ErrorCode::no_convergence: return "no-convergence";
    case ErrorCode::insufficient_precision: return "insufficient-precision";
    case ErrorCode::unsupported_characteristic: return "unsupported-characteristic";
    case ErrorCode::inseparable_polynomial: return "inseparable-polynomial";
    case ErrorCode::reducible_polynomial: return "reducible-polynomial";
    case ErrorCode::unnormalized_input: return "unnormalized-input";
    case ErrorCode::degree_mismatch: return "degree-mismatch";
    case ErrorCode::not_a_subgroup: return "not-a-subgroup";
    case ErrorCode::missing_multiplication: return "missing-multiplication";
    case ErrorCode::degenerate_line: return "degenerate-line";
    case ErrorCode::excluded_field: return "excluded-field";
    case ErrorCode::dimension: return "dimension";
    case ErrorCode::too_large: return "too-large";
    case ErrorCode::structural: return "structural";
    case ErrorCode::usage: return "usage";
  }
  return "unknown";
}

}  // namespace hyperlab
