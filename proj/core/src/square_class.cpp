#include "hyperlab/local_number.hpp"

#include <set>

namespace hyperlab {

namespace {

int parity(int v) { return ((v % 2) + 2) % 2; }

}  // namespace

SquareClass square_class(const LocalNumber& u) {
  if (u.is_zero()) throw Error(ErrorCode::invalid_argument, "zero has no square class");
  const auto& spec = u.spec();
  const auto p = spec.prime();
  SquareClass out;
  out.valuation_parity = parity(u.order());

  if (spec.is_padic() && p == 2) {
    if (u.precision() < 3) throw Error(ErrorCode::insufficient_precision, "Q_2 square classes need the unit mod 8");
    const BigInt unit = u.unit_integer();
    const auto mod8 = static_cast<unsigned>(unit % 8);
    out.unit_classes = 4;
    out.unit_class = (mod8 - 1) / 2;
    if (mod8 == 1) {
      const Poly<Rationals> f(Rationals{}, {Rational(-unit), 0, 1});
      hensel_lift(f, LocalNumber::from_rational(spec, 1), u.precision());
    }
    return out;
  }
  if (!spec.is_padic() && p == 2)
    throw Error(ErrorCode::unsupported_characteristic, "square classes of F_2^k((t)) are not supported");

  const auto& residue = spec.residue_field();
  const Elem lead = u.digits().front();
  const bool square = residue.pow(lead, (residue.order() - 1) / 2) == 1;
  out.unit_class = square ? 0 : 1;
  if (square) {
    Elem root = 1;
    while (residue.mul(root, root) != lead) ++root;
    // Certify: the unit is a square exactly when its leading digit is.
    if (spec.is_padic()) {
      const Poly<Rationals> f(Rationals{}, {Rational(-u.unit_integer()), 0, 1});
      hensel_lift(f, LocalNumber::from_rational(spec, Rational(root)), u.precision());
    } else {
      const SeriesRing ring{residue};
      const SeriesPoly f(ring, {-u.unit_series(), ring.zero(), ring.one()});
      hensel_lift(f, LocalNumber::from_series(spec, FieldPoly::constant(residue, root)), u.precision());
    }
  }
  return out;
}

unsigned count_quadratic_extensions(const LocalFieldSpec& spec) {
  std::set<unsigned> classes;
  if (spec.is_padic()) {
    const auto p = spec.prime();
    const unsigned unit_modulus = p == 2 ? 8 : p;
    for (unsigned e = 0; e < 2; ++e)
      for (unsigned w = 1; w < unit_modulus; ++w) {
        if (w % p == 0) continue;
        const Rational value = Rational(e ? p * w : w);
        classes.insert(square_class(LocalNumber::from_rational(spec, value)).index());
      }
  } else {
    if (spec.prime() == 2)
      throw Error(ErrorCode::unsupported_characteristic, "F_2^k((t)) has infinitely many quadratic extensions");
    const auto& residue = spec.residue_field();
    for (int e = 0; e < 2; ++e)
      for (Elem w = 1; w < residue.order(); ++w)
        classes.insert(square_class(LocalNumber::from_series(spec, FieldPoly::constant(residue, w), e)).index());
  }
  return static_cast<unsigned>(classes.size()) - 1;
}

}  // namespace hyperlab
