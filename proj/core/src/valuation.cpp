#include "hyperlab/valuation.hpp"

namespace hyperlab {

const Rational& ValExponent::value() const {
  if (!value_) throw Error(ErrorCode::invalid_argument, "valuation is +infinity");
  return *value_;
}

ValExponent operator+(const ValExponent& a, const ValExponent& b) {
  if (a.is_infinite() || b.is_infinite()) return ValExponent::infinity();
  return ValExponent(*a.value_ + *b.value_);
}

ValExponent operator-(const ValExponent& a, const ValExponent& b) {
  if (b.is_infinite()) throw Error(ErrorCode::invalid_argument, "subtracting an infinite valuation");
  if (a.is_infinite()) return a;
  return ValExponent(*a.value_ - *b.value_);
}

ValExponent ValExponent::scaled(const Rational& factor) const {
  if (factor <= 0) throw Error(ErrorCode::invalid_argument, "valuation scale factor must be positive");
  if (is_infinite()) return *this;
  return ValExponent(*value_ * factor);
}

std::strong_ordering operator<=>(const ValExponent& a, const ValExponent& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  if (*a.value_ < *b.value_) return std::strong_ordering::less;
  if (*a.value_ > *b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ValExponent::to_string() const { return value_ ? format_rational(*value_) : "inf"; }

unsigned multiplicity(const BigInt& n, std::uint32_t p) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "multiplicity of a prime in zero");
  unsigned k = 0;
  BigInt m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

ValExponent padic_norm_rational(const Rational& a, std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_prime, std::to_string(p) + " is not prime");
  if (a == 0) return ValExponent::infinity();
  const long long num = multiplicity(boost::multiprecision::numerator(a), p);
  const long long den = multiplicity(boost::multiprecision::denominator(a), p);
  return ValExponent(num - den);
}

unsigned poly_multiplicity(const FieldPoly& g, const FieldPoly& h) {
  if (g.is_zero()) throw Error(ErrorCode::invalid_argument, "multiplicity in the zero polynomial");
  unsigned k = 0;
  FieldPoly rest = g;
  for (;;) {
    auto [quot, rem] = divmod(rest, h);
    if (!rem.is_zero()) return k;
    rest = std::move(quot);
    ++k;
  }
}

ValExponent hadic_norm_ratfunc(const RationalFunction& f, const FieldPoly& h, FunctionNorm norm) {
  if (f.denominator.is_zero()) throw Error(ErrorCode::invalid_argument, "rational function with zero denominator");
  f.numerator.require_same(f.denominator);
  if (f.numerator.is_zero()) return ValExponent::infinity();
  if (norm == FunctionNorm::degree) return ValExponent(f.denominator.degree() - f.numerator.degree());
  f.numerator.require_same(h);
  if (!is_irreducible(h)) throw Error(ErrorCode::reducible_modulus, h.to_string() + " is not irreducible");
  const long long num = poly_multiplicity(f.numerator, h);
  const long long den = poly_multiplicity(f.denominator, h);
  return ValExponent(num - den);
}

}  // namespace hyperlab
