#include "hyperlab/local_number.hpp"

namespace hyperlab {

namespace {

// Arithmetic in Z_p / p^K with exact integers.
struct PadicTrunc {
  std::uint32_t p;
  int cap;
  BigInt mod;

  using value = BigInt;

  PadicTrunc(std::uint32_t prime, int k) : p(prime), cap(k), mod(1) {
    for (int i = 0; i < k; ++i) mod *= p;
  }
  value reduce(value x) const {
    x %= mod;
    if (x < 0) x += mod;
    return x;
  }
  value add(const value& a, const value& b) const { return reduce(a + b); }
  value sub(const value& a, const value& b) const { return reduce(a - b); }
  value mul(const value& a, const value& b) const { return reduce(a * b); }
  int val(const value& x) const { return x == 0 ? cap : std::min(cap, static_cast<int>(multiplicity(x, p))); }
  value shift_down(value x, int e) const {
    for (int i = 0; i < e; ++i) x /= p;
    return x;
  }
  value inv_unit(const value& u) const {
    BigInt old_r = u, r = mod, old_s = 1, s = 0;
    while (r != 0) {
      const BigInt quot = old_r / r;
      BigInt tmp = old_r - quot * r;
      old_r = r;
      r = tmp;
      tmp = old_s - quot * s;
      old_s = s;
      s = tmp;
    }
    return reduce(old_s);
  }
};

// Arithmetic in F_q[t] / t^K with dense coefficient vectors of length K.
struct SeriesTrunc {
  GaloisField field;
  int cap;

  using value = std::vector<Elem>;

  value reduce(const FieldPoly& f) const {
    value out(static_cast<std::size_t>(cap), 0);
    for (std::size_t i = 0; i < out.size() && i < f.coeffs().size(); ++i) out[i] = f.coeffs()[i];
    return out;
  }
  value add(const value& a, const value& b) const {
    value out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.add(a[i], b[i]);
    return out;
  }
  value sub(const value& a, const value& b) const {
    value out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.sub(a[i], b[i]);
    return out;
  }
  value mul(const value& a, const value& b) const {
    value out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]));
    }
    return out;
  }
  int val(const value& x) const {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) return static_cast<int>(i);
    return cap;
  }
  value shift_down(const value& x, int e) const {
    value out(x.size(), 0);
    for (std::size_t i = static_cast<std::size_t>(e); i < x.size(); ++i) out[i - static_cast<std::size_t>(e)] = x[i];
    return out;
  }
  value inv_unit(const value& u) const {
    const Elem lead_inv = field.inv(u[0]);
    value out(u.size(), 0);
    out[0] = lead_inv;
    for (std::size_t n = 1; n < u.size(); ++n) {
      Elem acc = 0;
      for (std::size_t i = 1; i <= n; ++i) acc = field.add(acc, field.mul(u[i], out[n - i]));
      out[n] = field.neg(field.mul(lead_inv, acc));
    }
    return out;
  }
};

template <class T>
typename T::value evaluate(const T& ar, const std::vector<typename T::value>& coeffs, const typename T::value& x,
                           const typename T::value& zero) {
  auto acc = zero;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = ar.add(ar.mul(acc, x), *it);
  return acc;
}

// Newton iteration x <- x - f(x)/f'(x) while nu(f'(x)) stays e; stops once
// nu(f(x)) >= target + e, i.e. x agrees with the root to target digits.
template <class T>
typename T::value newton(const T& ar, const std::vector<typename T::value>& f, const std::vector<typename T::value>& df,
                         typename T::value x, const typename T::value& zero, int e, int target) {
  for (int iter = 0; iter < 64 + target; ++iter) {
    const auto fx = evaluate(ar, f, x, zero);
    if (ar.val(fx) >= target + e) return x;
    const auto dfx = evaluate(ar, df, x, zero);
    if (ar.val(dfx) != e) throw Error(ErrorCode::no_convergence, "derivative valuation changed during lifting");
    const auto step = ar.mul(ar.shift_down(fx, e), ar.inv_unit(ar.shift_down(dfx, e)));
    x = ar.sub(x, step);
  }
  throw Error(ErrorCode::no_convergence, "Newton iteration did not stabilise");
}

void check_target(unsigned target) {
  if (target == 0) throw Error(ErrorCode::invalid_argument, "target precision must be positive");
  if (target > LocalNumber::kMaxPrecision)
    throw Error(ErrorCode::insufficient_precision, "target precision exceeds the supported maximum");
}

}  // namespace

LocalNumber hensel_lift(const Poly<Rationals>& f, const LocalNumber& x0, unsigned target_precision) {
  const auto& spec = x0.spec();
  if (!spec.is_padic()) throw Error(ErrorCode::incompatible_field, "rational polynomial needs a p-adic start value");
  check_target(target_precision);
  if (f.degree() < 1) throw Error(ErrorCode::invalid_argument, "Hensel lifting needs a non-constant polynomial");
  const auto p = spec.prime();
  for (const auto& c : f.coeffs())
    if (padic_norm_rational(c, p) < ValExponent(0))
      throw Error(ErrorCode::unnormalized_input, "coefficient " + format_rational(c) + " is not p-integral");
  const int target = static_cast<int>(target_precision);

  if (f.degree() == 1) {
    // Linear: one Newton step from any start is exact.
    const Rational root = -f.coeff(0) / f.coeff(1);
    if (root == 0) return LocalNumber::zero(spec);
    const auto v = padic_norm_rational(root, p).value();
    const auto digits = static_cast<long long>(target) - static_cast<long long>(boost::multiprecision::numerator(v));
    if (digits < 1) throw Error(ErrorCode::insufficient_precision, "root is zero to the requested precision");
    return LocalNumber::from_rational(spec, root, static_cast<unsigned>(digits));
  }

  if (!x0.is_zero() && x0.order() < 0) throw Error(ErrorCode::unnormalized_input, "start value is not p-integral");
  const Rational start = x0.to_rational();
  const auto df = derivative(f);
  const Rational f_start = f(start);
  if (f_start == 0) {
    if (start == 0) return LocalNumber::zero(spec);
    return LocalNumber::from_rational(spec, start, target_precision);
  }
  const Rational df_start = df(start);
  const auto e_val = padic_norm_rational(df_start, p);
  if (e_val.is_infinite() || !(padic_norm_rational(f_start, p) > e_val + e_val))
    throw Error(ErrorCode::no_convergence, "Hensel condition |f(x0)| < |f'(x0)|^2 fails");
  const int e = static_cast<int>(boost::multiprecision::numerator(e_val.value()));

  const PadicTrunc ar(p, target + 2 * e + 2);
  std::vector<BigInt> fc, dfc;
  const auto to_residue = [&](const Rational& c) {
    const BigInt num = boost::multiprecision::numerator(c);
    const BigInt den = boost::multiprecision::denominator(c);
    return ar.mul(ar.reduce(num), ar.inv_unit(ar.reduce(den)));
  };
  for (const auto& c : f.coeffs()) fc.push_back(to_residue(c));
  for (const auto& c : df.coeffs()) dfc.push_back(to_residue(c));
  const BigInt x = newton(ar, fc, dfc, ar.reduce(boost::multiprecision::numerator(start)), BigInt(0), e, target);

  BigInt target_mod = 1;
  for (int i = 0; i < target; ++i) target_mod *= p;
  const BigInt root = x % target_mod;
  if (root == 0) throw Error(ErrorCode::insufficient_precision, "root is zero to the requested precision");
  const auto v = static_cast<int>(multiplicity(root, p));
  auto result = LocalNumber::from_rational(spec, Rational(root), static_cast<unsigned>(target - v));
  if (padic_norm_rational(f(result.to_rational()), p) < ValExponent(target))
    throw Error(ErrorCode::structural, "lifted root failed substitution check");
  return result;
}

LocalNumber hensel_lift(const SeriesPoly& f, const LocalNumber& x0, unsigned target_precision) {
  const auto& spec = x0.spec();
  if (spec.is_padic() || !(f.ring().base == spec.residue_field()))
    throw Error(ErrorCode::incompatible_field, "series polynomial needs a start value in the same F_q((t))");
  check_target(target_precision);
  if (f.degree() < 1) throw Error(ErrorCode::invalid_argument, "Hensel lifting needs a non-constant polynomial");
  const auto& field = spec.residue_field();
  const int target = static_cast<int>(target_precision);
  const auto t_order = [](const FieldPoly& g) -> ValExponent {
    if (g.is_zero()) return ValExponent::infinity();
    long long k = 0;
    while (g.coeffs()[static_cast<std::size_t>(k)] == 0) ++k;
    return ValExponent(k);
  };

  if (!x0.is_zero() && x0.order() < 0) throw Error(ErrorCode::unnormalized_input, "start value is not integral");
  const FieldPoly start = x0.is_zero() ? FieldPoly(field) : x0.unit_series().shifted(static_cast<std::size_t>(x0.order()));
  const auto df = derivative(f);
  const FieldPoly f_start = f(start);
  if (f_start.is_zero()) {
    if (start.is_zero()) return LocalNumber::zero(spec);
    return LocalNumber::from_series(spec, start, 0, target_precision);
  }
  const auto e_val = t_order(df(start));
  if (e_val.is_infinite() || !(t_order(f_start) > e_val + e_val))
    throw Error(ErrorCode::no_convergence, "Hensel condition |f(x0)| < |f'(x0)|^2 fails");
  const int e = static_cast<int>(boost::multiprecision::numerator(e_val.value()));

  const SeriesTrunc ar{field, target + 2 * e + 2};
  std::vector<SeriesTrunc::value> fc, dfc;
  for (const auto& c : f.coeffs()) fc.push_back(ar.reduce(c));
  for (const auto& c : df.coeffs()) dfc.push_back(ar.reduce(c));
  const auto zero = ar.reduce(FieldPoly(field));
  auto x = newton(ar, fc, dfc, ar.reduce(start), zero, e, target);
  x.resize(static_cast<std::size_t>(target));
  const FieldPoly root(field, x);
  if (root.is_zero()) throw Error(ErrorCode::insufficient_precision, "root is zero to the requested precision");
  if (t_order(f(root)) < ValExponent(target)) throw Error(ErrorCode::structural, "lifted root failed substitution check");
  const auto k = static_cast<unsigned>(boost::multiprecision::numerator(t_order(root).value()));
  return LocalNumber::from_series(spec, root, 0, target_precision - k);
}

}  // namespace hyperlab
