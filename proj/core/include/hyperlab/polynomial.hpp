#pragma once

#include "hyperlab/error.hpp"

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace hyperlab {

/// A coefficient ring handle: a small copyable object that knows how to
/// combine its value_type. Rings compare equal when they describe the same
/// structure; mixing unequal rings in one operation is an error.
template <class R>
concept CoefficientRing = requires(const R& r, const typename R::value_type& a, long long k) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.from_integer(k) } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.neg(a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.exact_div(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.equal(a, a) } -> std::convertible_to<bool>;
  { r == r } -> std::convertible_to<bool>;
};

template <class R>
concept CoefficientField = CoefficientRing<R> && requires(const R& r, const typename R::value_type& a) {
  { r.inv(a) } -> std::convertible_to<typename R::value_type>;
};

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial, coefficients stored low-to-high with no
/// trailing zeros. R is left unconstrained here so that a ring type can
/// mention Poly<R> in its own declaration; the free functions check it.
template <class R>
class Poly {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  explicit Poly(R ring) : ring_(std::move(ring)) {}
  Poly(R ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static Poly constant(const R& ring, value_type c) { return Poly(ring, {std::move(c)}); }
  static Poly monomial(const R& ring, value_type c, std::size_t k) {
    std::vector<value_type> v(k + 1, ring.zero());
    v[k] = std::move(c);
    return Poly(ring, std::move(v));
  }
  static Poly x(const R& ring) { return monomial(ring, ring.one(), 1); }

  const R& ring() const { return ring_; }
  const std::vector<value_type>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }

  value_type coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_.zero(); }
  value_type leading() const { return coeffs_.empty() ? ring_.zero() : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && ring_.equal(coeffs_.back(), ring_.one()); }

  value_type operator()(const value_type& x) const {
    value_type acc = ring_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = ring_.add(ring_.mul(acc, x), *it);
    return acc;
  }

  Poly operator-() const {
    std::vector<value_type> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(ring_.neg(c));
    return Poly(ring_, std::move(v));
  }

  Poly scaled(const value_type& s) const {
    std::vector<value_type> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(ring_.mul(c, s));
    return Poly(ring_, std::move(v));
  }

  /// Multiplies by X^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<value_type> v(k, ring_.zero());
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(ring_, std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.require_same(b);
    const auto& r = a.ring_;
    std::vector<value_type> v(std::max(a.coeffs_.size(), b.coeffs_.size()), r.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.add(a.coeff(i), b.coeff(i));
    return Poly(r, std::move(v));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    a.require_same(b);
    const auto& r = a.ring_;
    std::vector<value_type> v(std::max(a.coeffs_.size(), b.coeffs_.size()), r.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.sub(a.coeff(i), b.coeff(i));
    return Poly(r, std::move(v));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.require_same(b);
    const auto& r = a.ring_;
    if (a.is_zero() || b.is_zero()) return Poly(r);
    std::vector<value_type> v(a.coeffs_.size() + b.coeffs_.size() - 1, r.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (r.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = r.add(v[i + j], r.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Poly(r, std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (!(a.ring_ == b.ring_) || a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!a.ring_.equal(a.coeffs_[i], b.coeffs_[i])) return false;
    return true;
  }

  void require_same(const Poly& other) const {
    if (!(ring_ == other.ring_)) throw Error(ErrorCode::incompatible_field, "polynomials over different coefficient rings");
  }

  /// "[c0, c1, ...]" low-to-high, the format used in reports.
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) out += ", ";
      out += ring_.format(coeffs_[i]);
    }
    return out + "]";
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  R ring_;
  std::vector<value_type> coeffs_;
};

template <CoefficientRing R>
Poly<R> derivative(const Poly<R>& f) {
  const auto& r = f.ring();
  std::vector<typename R::value_type> v;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    v.push_back(r.mul(r.from_integer(static_cast<long long>(i)), f.coeffs()[i]));
  return Poly<R>(r, std::move(v));
}

/// Euclidean division a = q*b + r with deg r < deg b.
template <CoefficientField R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  a.require_same(b);
  if (b.is_zero()) throw Error(ErrorCode::invalid_argument, "polynomial division by zero");
  const auto& r = a.ring();
  auto rem = a.coeffs();
  const auto& d = b.coeffs();
  const auto lead_inv = r.inv(d.back());
  if (rem.size() < d.size()) return {Poly<R>(r), a};
  std::vector<typename R::value_type> quot(rem.size() - d.size() + 1, r.zero());
  for (std::size_t k = quot.size(); k-- > 0;) {
    auto c = r.mul(rem[k + d.size() - 1], lead_inv);
    quot[k] = c;
    if (r.is_zero(c)) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] = r.sub(rem[k + j], r.mul(c, d[j]));
  }
  rem.resize(d.size() - 1);
  return {Poly<R>(r, std::move(quot)), Poly<R>(r, std::move(rem))};
}

/// Division that must be exact; works over integral domains by dividing
/// leading coefficients with R::exact_div.
template <CoefficientRing R>
Poly<R> exact_quotient(const Poly<R>& a, const Poly<R>& b) {
  a.require_same(b);
  if (b.is_zero()) throw Error(ErrorCode::invalid_argument, "polynomial division by zero");
  const auto& r = a.ring();
  auto rem = a.coeffs();
  const auto& d = b.coeffs();
  if (a.is_zero()) return Poly<R>(r);
  if (rem.size() < d.size()) throw Error(ErrorCode::invalid_argument, "inexact polynomial division");
  std::vector<typename R::value_type> quot(rem.size() - d.size() + 1, r.zero());
  for (std::size_t k = quot.size(); k-- > 0;) {
    if (r.is_zero(rem[k + d.size() - 1])) continue;
    auto c = r.exact_div(rem[k + d.size() - 1], d.back());
    quot[k] = c;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] = r.sub(rem[k + j], r.mul(c, d[j]));
  }
  for (const auto& c : rem)
    if (!r.is_zero(c)) throw Error(ErrorCode::invalid_argument, "inexact polynomial division");
  return Poly<R>(r, std::move(quot));
}

template <CoefficientField R>
Poly<R> make_monic(const Poly<R>& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return f.scaled(f.ring().inv(f.leading()));
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <CoefficientField R>
Poly<R> poly_gcd(Poly<R> a, Poly<R> b) {
  a.require_same(b);
  while (!b.is_zero()) {
    auto rem = divmod(a, b).second;
    a = std::move(b);
    b = std::move(rem);
  }
  return make_monic(a);
}

template <CoefficientField R>
Poly<R> pow_mod(Poly<R> base, unsigned long long e, const Poly<R>& m) {
  Poly<R> result = divmod(Poly<R>::constant(m.ring(), m.ring().one()), m).second;
  base = divmod(base, m).second;
  while (e) {
    if (e & 1U) result = divmod(result * base, m).second;
    e >>= 1U;
    if (e) base = divmod(base * base, m).second;
  }
  return result;
}

/// Sylvester matrix of f (degree m) and g (degree n), size (m+n)x(m+n),
/// leading coefficients first: n shifted rows of f then m shifted rows of g.
template <CoefficientRing R>
std::vector<std::vector<typename R::value_type>> sylvester_matrix(const Poly<R>& f, const Poly<R>& g) {
  f.require_same(g);
  const auto& r = f.ring();
  const int m = f.degree();
  const int n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<typename R::value_type>> s(size, std::vector<typename R::value_type>(size, r.zero()));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) s[row][row + k] = f.coeff(static_cast<std::size_t>(m - k));
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) s[n + row][row + k] = g.coeff(static_cast<std::size_t>(n - k));
  return s;
}

/// Fraction-free (Bareiss) determinant; exact over any integral domain.
template <CoefficientRing R>
typename R::value_type bareiss_determinant(const R& r, std::vector<std::vector<typename R::value_type>> a) {
  const std::size_t n = a.size();
  if (n == 0) return r.one();
  bool negate = false;
  auto prev = r.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (r.is_zero(a[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && r.is_zero(a[swap_row][k])) ++swap_row;
      if (swap_row == n) return r.zero();
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = r.exact_div(r.sub(r.mul(a[i][j], a[k][k]), r.mul(a[i][k], a[k][j])), prev);
      a[i][k] = r.zero();
    }
    prev = a[k][k];
  }
  auto det = a[n - 1][n - 1];
  return negate ? r.neg(det) : det;
}

/// Res(f, g) as the Sylvester determinant. For monic f this is the product
/// of g over the roots of f, counted with multiplicity.
template <CoefficientRing R>
typename R::value_type poly_resultant(const Poly<R>& f, const Poly<R>& g) {
  f.require_same(g);
  const auto& r = f.ring();
  if (f.is_zero()) throw Error(ErrorCode::undefined_resultant, "resultant with zero first argument");
  if (g.is_zero()) return f.degree() == 0 ? r.one() : r.zero();
  return bareiss_determinant(r, sylvester_matrix(f, g));
}

/// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f), with f' taken at formal
/// degree d-1 so the identity also holds when char divides d.
template <CoefficientRing R>
typename R::value_type poly_discriminant(const Poly<R>& f) {
  const auto& r = f.ring();
  if (f.is_zero() || f.degree() < 1) throw Error(ErrorCode::undefined_discriminant, "discriminant of a constant");
  const int d = f.degree();
  if (d == 1) return r.one();
  const auto df = derivative(f);
  auto res = poly_resultant(f, df);
  if (!df.is_zero())
    for (int k = df.degree(); k < d - 1; ++k) res = r.mul(res, f.leading());
  res = r.exact_div(res, f.leading());
  const long long pairs = static_cast<long long>(d) * (d - 1) / 2;
  return pairs % 2 ? r.neg(res) : res;
}

/// Polynomials over a field as a coefficient ring (used for F_q[t]).
template <CoefficientField F>
struct PolyRing {
  using value_type = Poly<F>;
  F base;

  value_type zero() const { return Poly<F>(base); }
  value_type one() const { return Poly<F>::constant(base, base.one()); }
  value_type from_integer(long long k) const { return Poly<F>::constant(base, base.from_integer(k)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type exact_div(const value_type& a, const value_type& b) const { return exact_quotient(a, b); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string format(const value_type& a) const { return a.to_string(); }

  bool operator==(const PolyRing& other) const { return base == other.base; }
};

}  // namespace hyperlab
