#pragma once

#include "hyperlab/galois_field.hpp"
#include "hyperlab/rational.hpp"
#include "hyperlab/valuation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hyperlab {

/// Q_p or F_q((t)). The uniformizer is p, respectively t.
class LocalFieldSpec {
 public:
  enum class Kind { padic, laurent };

  static LocalFieldSpec padic(std::uint32_t p);
  static LocalFieldSpec laurent(GaloisField residue);

  Kind kind() const { return kind_; }
  bool is_padic() const { return kind_ == Kind::padic; }
  /// Residue characteristic.
  std::uint32_t prime() const { return residue_.characteristic(); }
  /// F_p for Q_p, F_q for F_q((t)).
  const GaloisField& residue_field() const { return residue_; }
  std::string name() const;

  bool operator==(const LocalFieldSpec& other) const { return kind_ == other.kind_ && residue_ == other.residue_; }

 private:
  LocalFieldSpec(Kind kind, GaloisField residue) : kind_(kind), residue_(std::move(residue)) {}

  Kind kind_;
  GaloisField residue_;
};

/// Series polynomials F_q[t], the integral coefficients for F_q((t)) inputs.
using SeriesRing = PolyRing<GaloisField>;
using SeriesPoly = Poly<SeriesRing>;

/// pi^v * (d_0 + d_1 pi + ... + d_{N-1} pi^{N-1}) + O(pi^{v+N}) with d_0 != 0,
/// or exact zero. Digits are residues 0..p-1 for Q_p and F_q indices for
/// F_q((t)). Arithmetic tracks the absolute precision and throws
/// insufficient_precision rather than returning a value with no known digit.
class LocalNumber {
 public:
  static constexpr unsigned kDefaultPrecision = 16;
  static constexpr unsigned kMaxPrecision = 4096;

  static LocalNumber zero(const LocalFieldSpec& spec);
  static LocalNumber from_digits(const LocalFieldSpec& spec, int valuation, std::vector<Elem> digits);
  /// Q_p only.
  static LocalNumber from_rational(const LocalFieldSpec& spec, const Rational& value,
                                   unsigned precision = kDefaultPrecision);
  /// F_q((t)) only: t^shift * f(t).
  static LocalNumber from_series(const LocalFieldSpec& spec, const FieldPoly& f, int shift = 0,
                                 unsigned precision = kDefaultPrecision);

  const LocalFieldSpec& spec() const { return spec_; }
  bool is_zero() const { return zero_; }
  ValExponent valuation() const { return zero_ ? ValExponent::infinity() : ValExponent(valuation_); }
  /// Integer valuation; throws for zero.
  int order() const;
  unsigned precision() const { return static_cast<unsigned>(digits_.size()); }
  int absolute_precision() const { return valuation_ + static_cast<int>(digits_.size()); }
  const std::vector<Elem>& digits() const { return digits_; }

  LocalNumber unit_part() const;
  LocalNumber inverse() const;
  LocalNumber operator-() const;
  friend LocalNumber operator+(const LocalNumber& a, const LocalNumber& b);
  friend LocalNumber operator-(const LocalNumber& a, const LocalNumber& b);
  friend LocalNumber operator*(const LocalNumber& a, const LocalNumber& b);
  friend LocalNumber operator/(const LocalNumber& a, const LocalNumber& b);
  friend bool operator==(const LocalNumber& a, const LocalNumber& b);

  /// Q_p: the integer sum d_i p^i of the digits (no valuation shift).
  BigInt unit_integer() const;
  /// Q_p: the rational value of the known digits.
  Rational to_rational() const;
  /// F_q((t)): the digits as a polynomial in t (no valuation shift).
  FieldPoly unit_series() const;

  std::string to_string() const;

 private:
  LocalNumber(LocalFieldSpec spec, bool zero, int valuation, std::vector<Elem> digits)
      : spec_(std::move(spec)), zero_(zero), valuation_(valuation), digits_(std::move(digits)) {}

  LocalFieldSpec spec_;
  bool zero_;
  int valuation_;
  std::vector<Elem> digits_;
};

/// Newton iteration for a simple root. Requires |f(x0)| < |f'(x0)|^2 and
/// returns x with x congruent to the root modulo pi^target_precision.
/// Throws no_convergence when the condition fails, insufficient_precision
/// when the root cannot be represented with at least one known digit.
LocalNumber hensel_lift(const Poly<Rationals>& f, const LocalNumber& x0, unsigned target_precision);
LocalNumber hensel_lift(const SeriesPoly& f, const LocalNumber& x0, unsigned target_precision);

/// Class in F^x / (F^x)^2: parity of the valuation plus a unit class, which
/// is the quadratic character of the leading digit for odd residue
/// characteristic and (u mod 8 - 1)/2 for Q_2.
struct SquareClass {
  int valuation_parity = 0;
  unsigned unit_class = 0;
  unsigned unit_classes = 2;

  unsigned index() const { return static_cast<unsigned>(valuation_parity) * unit_classes + unit_class; }
  bool is_trivial() const { return valuation_parity == 0 && unit_class == 0; }
  bool operator==(const SquareClass&) const = default;
};

SquareClass square_class(const LocalNumber& u);

/// |F^x / (F^x)^2| - 1, the number of quadratic extensions up to isomorphism.
unsigned count_quadratic_extensions(const LocalFieldSpec& spec);

}  // namespace hyperlab
