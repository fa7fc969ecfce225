#pragma once

#include "hyperlab/polynomial.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hyperlab {

/// Element handle inside a GaloisField: the base-|base| digits of the index
/// are the coefficient vector over the base field, low degree first. Prime
/// field elements are their residues, and the base field embeds into an
/// extension as the indices [0, |base|).
using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);

/// A finite field, either F_p or base[X]/(modulus) for a monic irreducible
/// modulus over another GaloisField. Immutable, cheap to copy, shareable.
class GaloisField {
 public:
  using value_type = Elem;

  static GaloisField prime(std::uint32_t p);
  /// Throws reducible_modulus unless the modulus is monic irreducible.
  static GaloisField extension(const GaloisField& base, const Poly<GaloisField>& modulus);
  /// F_p[X]/(modulus) with modulus coefficients given low-to-high over F_p.
  static GaloisField from_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus);
  /// F_{p^n} built with the lexicographically least irreducible of degree n.
  static GaloisField make(std::uint32_t p, unsigned n);
  /// F_q for a prime power q, built as make(p, n).
  static GaloisField of_order(std::uint32_t q);

  std::uint32_t characteristic() const { return impl_->p; }
  std::uint32_t order() const { return impl_->order; }
  unsigned degree() const { return impl_->degree; }
  unsigned absolute_degree() const { return impl_->absolute_degree; }
  bool is_prime_field() const { return impl_->base == nullptr; }
  GaloisField base() const;
  Poly<GaloisField> modulus() const;
  /// Structural identity such as "3" or "3[2,2,1]".
  const std::string& signature() const { return impl_->signature; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_integer(long long k) const;
  Elem add(Elem a, Elem b) const { return impl_->has_tables ? impl_->add[a * impl_->order + b] : slow_add(a, b); }
  Elem neg(Elem a) const { return impl_->has_tables ? impl_->neg[a] : slow_neg(a); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return impl_->has_tables ? impl_->mul[a * impl_->order + b] : slow_mul(a, b); }
  /// Throws invalid_argument for zero.
  Elem inv(Elem a) const;
  Elem exact_div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::string format(Elem a) const;

  std::vector<Elem> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const Elem> coeffs) const;
  /// Coordinates over the prime field, length absolute_degree().
  std::vector<std::uint32_t> prime_coords(Elem a) const;
  std::uint64_t multiplicative_order(Elem a) const;
  /// Smallest index that generates the multiplicative group.
  Elem primitive_element() const;

  bool operator==(const GaloisField& other) const {
    return impl_ == other.impl_ || impl_->signature == other.impl_->signature;
  }

 private:
  struct Impl {
    std::uint32_t p = 0;
    std::uint32_t order = 0;
    unsigned degree = 1;
    unsigned absolute_degree = 1;
    std::uint32_t base_order = 0;
    std::shared_ptr<const Impl> base;
    std::vector<Elem> modulus;
    std::string signature;
    bool has_tables = false;
    std::vector<Elem> add, mul, neg;
  };

  explicit GaloisField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static std::shared_ptr<Impl> finish(std::shared_ptr<Impl> impl);

  Elem slow_add(Elem a, Elem b) const;
  Elem slow_neg(Elem a) const;
  Elem slow_mul(Elem a, Elem b) const;

  std::shared_ptr<const Impl> impl_;
};

using FieldPoly = Poly<GaloisField>;

/// A field element that remembers its field; arithmetic across different
/// fields throws incompatible_field instead of coercing.
class FieldElement {
 public:
  FieldElement(GaloisField field, Elem value);

  const GaloisField& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<Elem> coeffs() const { return field_.coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }
  FieldElement inverse() const { return {field_, field_.inv(value_)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  GaloisField field_;
  Elem value_;
};

/// x -> x^(p^k); every automorphism of a finite field has this form.
class FieldAutomorphism {
 public:
  FieldAutomorphism(GaloisField field, unsigned power);

  const GaloisField& field() const { return field_; }
  unsigned power() const { return power_; }
  Elem operator()(Elem x) const { return images_[x]; }
  FieldAutomorphism compose(const FieldAutomorphism& inner) const;
  bool is_identity() const { return power_ == 0; }

 private:
  GaloisField field_;
  unsigned power_;
  std::vector<Elem> images_;
};

/// Frobenius power k, normalized modulo the absolute degree.
FieldAutomorphism frobenius(const GaloisField& field, long long k);

bool is_irreducible(const FieldPoly& f);
/// Lexicographically least monic irreducible of degree d, comparing
/// coefficients from the top down.
FieldPoly find_irreducible(const GaloisField& base, unsigned d);

}  // namespace hyperlab
