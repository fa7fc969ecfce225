#pragma once

#include "hyperlab/galois_field.hpp"
#include "hyperlab/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace hyperlab {

/// Exponent nu of a non-Archimedean norm |x| = base^(-nu). Stored as an
/// exact rational or +infinity (for zero); never as a float.
class ValExponent {
 public:
  ValExponent(long long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  ValExponent(Rational v) : value_(std::move(v)) {}   // NOLINT(google-explicit-constructor)
  static ValExponent infinity() { return ValExponent(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws invalid_argument for +infinity.
  const Rational& value() const;

  friend ValExponent operator+(const ValExponent& a, const ValExponent& b);
  friend ValExponent operator-(const ValExponent& a, const ValExponent& b);
  /// Scales by a positive rational; infinity stays infinity.
  ValExponent scaled(const Rational& factor) const;

  friend bool operator==(const ValExponent& a, const ValExponent& b) = default;
  friend std::strong_ordering operator<=>(const ValExponent& a, const ValExponent& b);

  /// "inf", "2" or "1/2".
  std::string to_string() const;

 private:
  ValExponent() = default;
  std::optional<Rational> value_;
};

/// Multiplicity of the prime p in an integer; n must be nonzero.
unsigned multiplicity(const BigInt& n, std::uint32_t p);

/// p-adic valuation of a rational: v_p(numerator) - v_p(denominator).
ValExponent padic_norm_rational(const Rational& a, std::uint32_t p);

struct RationalFunction {
  FieldPoly numerator;
  FieldPoly denominator;
};

enum class FunctionNorm { hadic, degree };

/// h-adic valuation on k(t): multiplicity of the irreducible h in the
/// numerator minus that in the denominator. With FunctionNorm::degree the
/// degree norm deg(den) - deg(num) is returned and h is ignored.
ValExponent hadic_norm_ratfunc(const RationalFunction& f, const FieldPoly& h, FunctionNorm norm = FunctionNorm::hadic);

/// Exponent of the largest power of h dividing g (g nonzero).
unsigned poly_multiplicity(const FieldPoly& g, const FieldPoly& h);

}  // namespace hyperlab
