#include "hyperlab/galois_field.hpp"

#include <numeric>

namespace hyperlab {

namespace {

constexpr std::uint32_t kTableLimit = 1024;
constexpr std::uint64_t kOrderLimit = 1U << 24;

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GaloisField GaloisField::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_prime, std::to_string(p) + " is not prime");
  if (p >= kOrderLimit) throw Error(ErrorCode::too_large, "prime field too large");
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->order = p;
  impl->signature = std::to_string(p);
  return GaloisField(finish(std::move(impl)));
}

GaloisField GaloisField::extension(const GaloisField& base, const Poly<GaloisField>& modulus) {
  if (!(modulus.ring() == base)) throw Error(ErrorCode::incompatible_field, "modulus is over a different field");
  if (modulus.degree() < 1 || !modulus.is_monic())
    throw Error(ErrorCode::reducible_modulus, "modulus must be monic of positive degree");
  const auto d = static_cast<unsigned>(modulus.degree());
  std::uint64_t order = 1;
  for (unsigned i = 0; i < d; ++i) {
    order *= base.order();
    if (order > kOrderLimit) throw Error(ErrorCode::too_large, "field order exceeds supported size");
  }
  if (!is_irreducible(modulus))
    throw Error(ErrorCode::reducible_modulus, modulus.to_string() + " is reducible over F_" + std::to_string(base.order()));
  auto impl = std::make_shared<Impl>();
  impl->p = base.characteristic();
  impl->order = static_cast<std::uint32_t>(order);
  impl->degree = d;
  impl->absolute_degree = d * base.absolute_degree();
  impl->base_order = base.order();
  impl->base = base.impl_;
  impl->modulus = modulus.coeffs();
  impl->signature = base.signature() + "[";
  for (std::size_t i = 0; i < impl->modulus.size(); ++i) {
    if (i) impl->signature += ",";
    impl->signature += std::to_string(impl->modulus[i]);
  }
  impl->signature += "]";
  return GaloisField(finish(std::move(impl)));
}

GaloisField GaloisField::from_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  auto fp = prime(p);
  std::vector<Elem> c;
  for (auto v : modulus) c.push_back(v % p);
  if (c.size() == 2 && c.back() == 1) return fp;
  return extension(fp, Poly<GaloisField>(fp, std::move(c)));
}

GaloisField GaloisField::make(std::uint32_t p, unsigned n) {
  auto fp = prime(p);
  if (n == 0) throw Error(ErrorCode::invalid_argument, "extension degree must be positive");
  if (n == 1) return fp;
  return extension(fp, find_irreducible(fp, n));
}

GaloisField GaloisField::of_order(std::uint32_t q) {
  if (q < 2) throw Error(ErrorCode::invalid_argument, "field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p) ++p;
  unsigned n = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) throw Error(ErrorCode::invalid_argument, std::to_string(q) + " is not a prime power");
  return make(p, n);
}

std::shared_ptr<GaloisField::Impl> GaloisField::finish(std::shared_ptr<Impl> impl) {
  if (impl->order > kTableLimit) return impl;
  const GaloisField slow(impl);
  const auto q = impl->order;
  std::vector<Elem> add(std::size_t{q} * q), mul(std::size_t{q} * q), neg(q);
  for (Elem a = 0; a < q; ++a) {
    neg[a] = slow.slow_neg(a);
    for (Elem b = 0; b < q; ++b) {
      add[a * q + b] = slow.slow_add(a, b);
      mul[a * q + b] = b < a ? mul[b * q + a] : slow.slow_mul(a, b);
    }
  }
  impl->add = std::move(add);
  impl->mul = std::move(mul);
  impl->neg = std::move(neg);
  impl->has_tables = true;
  return impl;
}

GaloisField GaloisField::base() const {
  if (!impl_->base) throw Error(ErrorCode::invalid_argument, "prime field has no base");
  return GaloisField(impl_->base);
}

Poly<GaloisField> GaloisField::modulus() const {
  if (!impl_->base) {
    // F_p viewed as F_p[X]/(X).
    return Poly<GaloisField>::x(*this);
  }
  return Poly<GaloisField>(base(), impl_->modulus);
}

Elem GaloisField::from_integer(long long k) const {
  const long long p = impl_->p;
  return static_cast<Elem>(((k % p) + p) % p);
}

std::vector<Elem> GaloisField::coeffs(Elem a) const {
  if (!impl_->base) return {a};
  std::vector<Elem> out(impl_->degree);
  for (auto& c : out) {
    c = a % impl_->base_order;
    a /= impl_->base_order;
  }
  return out;
}

Elem GaloisField::from_coeffs(std::span<const Elem> coeffs) const {
  if (!impl_->base) {
    if (coeffs.size() > 1) throw Error(ErrorCode::invalid_argument, "too many coefficients for a prime field");
    return coeffs.empty() ? 0 : coeffs[0] % impl_->p;
  }
  if (coeffs.size() > impl_->degree) throw Error(ErrorCode::invalid_argument, "coefficient vector longer than extension degree");
  Elem out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= impl_->base_order) throw Error(ErrorCode::invalid_argument, "coefficient out of range for base field");
    out = out * impl_->base_order + coeffs[i];
  }
  return out;
}

std::vector<std::uint32_t> GaloisField::prime_coords(Elem a) const {
  if (!impl_->base) return {a};
  const GaloisField b = base();
  std::vector<std::uint32_t> out;
  for (auto c : coeffs(a)) {
    auto sub = b.prime_coords(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

Elem GaloisField::slow_add(Elem a, Elem b) const {
  if (!impl_->base) return (a + b) % impl_->p;
  const GaloisField bf = base();
  auto x = coeffs(a);
  auto y = coeffs(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = bf.add(x[i], y[i]);
  return from_coeffs(x);
}

Elem GaloisField::slow_neg(Elem a) const {
  if (!impl_->base) return a == 0 ? 0 : impl_->p - a;
  const GaloisField bf = base();
  auto x = coeffs(a);
  for (auto& c : x) c = bf.neg(c);
  return from_coeffs(x);
}

Elem GaloisField::slow_mul(Elem a, Elem b) const {
  if (!impl_->base) return static_cast<Elem>(std::uint64_t{a} * b % impl_->p);
  const GaloisField bf = base();
  const auto x = coeffs(a);
  const auto y = coeffs(b);
  const std::size_t d = impl_->degree;
  std::vector<Elem> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = bf.add(prod[i + j], bf.mul(x[i], y[j]));
  }
  const auto& m = impl_->modulus;
  for (std::size_t k = prod.size(); k-- > d;) {
    const Elem c = prod[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[k - d + j] = bf.sub(prod[k - d + j], bf.mul(c, m[j]));
    prod[k] = 0;
  }
  prod.resize(d);
  return from_coeffs(prod);
}

Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e) {
    if (e & 1U) result = mul(result, a);
    e >>= 1U;
    if (e) a = mul(a, a);
  }
  return result;
}

Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::invalid_argument, "inverse of zero");
  return pow(a, impl_->order - 2);
}

std::string GaloisField::format(Elem a) const { return std::to_string(a); }

std::uint64_t GaloisField::multiplicative_order(Elem a) const {
  if (a == 0) throw Error(ErrorCode::invalid_argument, "zero has no multiplicative order");
  std::uint64_t k = 1;
  for (Elem x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

Elem GaloisField::primitive_element() const {
  for (Elem g = 1; g < order(); ++g)
    if (multiplicative_order(g) == order() - 1) return g;
  throw Error(ErrorCode::structural, "no primitive element found");
}

FieldElement::FieldElement(GaloisField field, Elem value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_.order()) throw Error(ErrorCode::invalid_argument, "element index out of range");
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::incompatible_field, "F_" + a.field().signature() + " vs F_" + b.field().signature());
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.mul(a.value_, a.field_.inv(b.value_))};
}

FieldAutomorphism::FieldAutomorphism(GaloisField field, unsigned power)
    : field_(std::move(field)), power_(power % field_.absolute_degree()) {
  std::uint64_t e = 1;
  for (unsigned i = 0; i < power_; ++i) e *= field_.characteristic();
  images_.resize(field_.order());
  for (Elem x = 0; x < field_.order(); ++x) images_[x] = field_.pow(x, e);
}

FieldAutomorphism FieldAutomorphism::compose(const FieldAutomorphism& inner) const {
  if (!(field_ == inner.field_)) throw Error(ErrorCode::incompatible_field, "automorphisms of different fields");
  return FieldAutomorphism(field_, power_ + inner.power_);
}

FieldAutomorphism frobenius(const GaloisField& field, long long k) {
  const long long n = field.absolute_degree();
  return FieldAutomorphism(field, static_cast<unsigned>(((k % n) + n) % n));
}

bool is_irreducible(const FieldPoly& f) {
  const auto& field = f.ring();
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  if (d == 2) {
    for (Elem x = 0; x < field.order(); ++x)
      if (f(x) == 0) return false;
    return true;
  }
  const auto monic = make_monic(f);
  const auto x = FieldPoly::x(field);
  // X^(q^k) mod f for k = 0..d
  std::vector<FieldPoly> frob{divmod(x, monic).second};
  for (int k = 1; k <= d; ++k) frob.push_back(pow_mod(frob.back(), field.order(), monic));
  if (!(frob[static_cast<std::size_t>(d)] == frob[0])) return false;
  for (unsigned r : prime_divisors(static_cast<unsigned>(d))) {
    const auto g = poly_gcd(frob[static_cast<std::size_t>(d) / r] - x, monic);
    if (g.degree() != 0) return false;
  }
  return true;
}

FieldPoly find_irreducible(const GaloisField& base, unsigned d) {
  if (d == 0) throw Error(ErrorCode::invalid_argument, "degree must be positive");
  const std::uint64_t q = base.order();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) {
    count *= q;
    if (count > (std::uint64_t{1} << 40)) throw Error(ErrorCode::too_large, "search space too large");
  }
  // Candidate m encodes the lower coefficients in base q, so increasing m
  // walks the monic polynomials in lexicographic order from the top down.
  for (std::uint64_t m = 0; m < count; ++m) {
    std::vector<Elem> c(d + 1);
    std::uint64_t rest = m;
    for (unsigned i = 0; i < d; ++i) {
      c[i] = static_cast<Elem>(rest % q);
      rest /= q;
    }
    c[d] = 1;
    FieldPoly f(base, std::move(c));
    if (is_irreducible(f)) return f;
  }
  throw Error(ErrorCode::structural, "no irreducible polynomial found");
}

}  // namespace hyperlab
