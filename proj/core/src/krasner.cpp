#include "hyperlab/krasner.hpp"

namespace hyperlab {

namespace {

/// Residue fields larger than this are not scanned for simple roots.
constexpr std::uint64_t kResidueScanLimit = 1 << 16;

template <class P>
[[noreturn]] void throw_reducible(const P& f) {
  throw Error(ErrorCode::reducible_polynomial, f.to_string() + " factors over the local field");
}

struct PadicRoute {
  using poly = Poly<Rationals>;
  std::uint32_t p;

  static PadicRoute of(const LocalFieldSpec& spec) {
    if (!spec.is_padic()) throw Error(ErrorCode::incompatible_field, "rational polynomials need a p-adic field");
    return {spec.prime()};
  }
  ValExponent valuation(const Rational& c) const { return padic_norm_rational(c, p); }

  // Normalized inputs have denominators prime to p, so clearing them scales
  // resultants and discriminants by p-adic units only.
  static Poly<Integers> integral(const poly& f) {
    BigInt l = 1;
    for (const auto& c : f.coeffs()) l = boost::multiprecision::lcm(l, denominator(c));
    std::vector<BigInt> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(numerator(c) * (l / denominator(c)));
    return Poly<Integers>(Integers{}, std::move(out));
  }
  ValExponent discriminant_valuation(const poly& f) const {
    const auto d = poly_discriminant(integral(f));
    if (d != 0 && splits(f, d)) throw_reducible(f);
    return padic_norm_rational(Rational(d), p);
  }
  ValExponent resultant_valuation(const poly& f, const poly& g) const {
    return padic_norm_rational(Rational(poly_resultant(integral(f), integral(g))), p);
  }

  /// Evidence that f factors over Q_p: a square discriminant in degree 2
  /// (the scaling by a unit square does not change the class), otherwise a
  /// simple root modulo p.
  bool splits(const poly& f, BigInt disc) const {
    if (f.degree() == 2) {
      unsigned v = 0;
      while (disc % p == 0) {
        disc /= p;
        ++v;
      }
      if (v % 2) return false;
      if (p == 2) return ((disc % 8) + 8) % 8 == 1;
      return boost::multiprecision::powm(((disc % p) + p) % p, BigInt((p - 1) / 2), BigInt(p)) == 1;
    }
    if (p > kResidueScanLimit) return false;
    const auto g = integral(f);
    std::vector<std::uint64_t> c;
    for (const auto& x : g.coeffs()) c.push_back(static_cast<std::uint64_t>(((x % p) + p) % p));
    for (std::uint64_t r = 0; r < p; ++r) {
      std::uint64_t value = 0, slope = 0;
      for (std::size_t i = c.size(); i-- > 0;) {
        slope = (slope * r + value) % p;
        value = (value * r + c[i]) % p;
      }
      if (value == 0 && slope != 0) return true;
    }
    return false;
  }
};

struct SeriesRoute {
  using poly = SeriesPoly;

  static SeriesRoute of(const LocalFieldSpec& spec, const SeriesPoly& f) {
    if (spec.is_padic() || !(f.ring().base == spec.residue_field()))
      throw Error(ErrorCode::incompatible_field, "series polynomials need the matching F_q((t))");
    return {};
  }
  ValExponent valuation(const FieldPoly& c) const {
    if (c.is_zero()) return ValExponent::infinity();
    long long k = 0;
    while (c.coeffs()[static_cast<std::size_t>(k)] == 0) ++k;
    return ValExponent(k);
  }
  ValExponent discriminant_valuation(const poly& f) const {
    const auto d = poly_discriminant(f);
    if (!d.is_zero() && splits(f, d)) throw_reducible(f);
    return valuation(d);
  }
  ValExponent resultant_valuation(const poly& f, const poly& g) const { return valuation(poly_resultant(f, g)); }

  /// Degree 2 in odd characteristic: square discriminant (even order and a
  /// square leading digit). Otherwise a simple root of f modulo t.
  bool splits(const poly& f, const FieldPoly& disc) const {
    const auto& k = disc.ring();
    if (f.degree() == 2 && k.characteristic() != 2) {
      std::size_t v = 0;
      while (disc.coeffs()[v] == 0) ++v;
      return v % 2 == 0 && k.pow(disc.coeffs()[v], (k.order() - 1) / 2) == k.one();
    }
    if (k.order() > kResidueScanLimit) return false;
    std::vector<Elem> c;
    for (const auto& x : f.coeffs()) c.push_back(x.is_zero() ? k.zero() : x.coeffs().front());
    for (Elem r = 0; r < k.order(); ++r) {
      Elem value = k.zero(), slope = k.zero();
      for (std::size_t i = c.size(); i-- > 0;) {
        slope = k.add(k.mul(slope, r), value);
        value = k.add(k.mul(value, r), c[i]);
      }
      if (value == k.zero() && slope != k.zero()) return true;
    }
    return false;
  }
};

template <class Route>
void require_normalized(const Route& route, const typename Route::poly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw Error(ErrorCode::invalid_argument, "expected a monic polynomial of positive degree");
  for (const auto& c : f.coeffs())
    if (route.valuation(c) < ValExponent(0))
      throw Error(ErrorCode::unnormalized_input, "coefficient outside the valuation ring in " + f.to_string());
}

template <class Route>
ValExponent radius_bound(const Route& route, const typename Route::poly& p) {
  require_normalized(route, p);
  // Characteristic 0 or not, a repeated root is exactly a zero discriminant.
  const auto v = route.discriminant_valuation(p);
  if (v.is_infinite()) throw Error(ErrorCode::inseparable_polynomial, p.to_string() + " has a repeated root");
  return v.scaled(Rational(1, 2));
}

template <class Route>
KrasnerResult separates(const Route& route, const typename Route::poly& p, const typename Route::poly& q) {
  p.require_same(q);
  if (p.degree() != q.degree())
    throw Error(ErrorCode::degree_mismatch, "degrees " + std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  KrasnerResult out;
  out.radius_valuation = radius_bound(route, p);
  require_normalized(route, q);
  const Rational d = p.degree();
  out.resultant_valuation = route.resultant_valuation(p, q);
  // All conjugates of a root share one absolute value, so |q(x_i)| is the
  // d-th root of |Res(p, q)| for every root x_i of p.
  out.conjugate_valuation = out.resultant_valuation.scaled(1 / d);
  out.threshold = out.radius_valuation.scaled(d);
  out.verdict = out.conjugate_valuation > out.threshold ? KrasnerVerdict::certified_isomorphic : KrasnerVerdict::inconclusive;
  return out;
}

}  // namespace

std::string_view to_string(KrasnerVerdict v) {
  return v == KrasnerVerdict::certified_isomorphic ? "certified-isomorphic" : "inconclusive";
}

ValExponent krasner_radius_bound(const Poly<Rationals>& p, const LocalFieldSpec& spec) {
  return radius_bound(PadicRoute::of(spec), p);
}

ValExponent krasner_radius_bound(const SeriesPoly& p, const LocalFieldSpec& spec) {
  return radius_bound(SeriesRoute::of(spec, p), p);
}

KrasnerResult krasner_separates(const Poly<Rationals>& p, const Poly<Rationals>& q, const LocalFieldSpec& spec) {
  return separates(PadicRoute::of(spec), p, q);
}

KrasnerResult krasner_separates(const SeriesPoly& p, const SeriesPoly& q, const LocalFieldSpec& spec) {
  return separates(SeriesRoute::of(spec, p), p, q);
}

}  // namespace hyperlab
