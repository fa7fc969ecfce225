#pragma once

#include "hyperlab/galois_field.hpp"
#include "hyperlab/multi_op_table.hpp"

#include <array>
#include <optional>
#include <vector>

namespace hyperlab {

/// The hyperring F_q[X] modulo F_q^x: a coset is a polynomial up to a
/// nonzero scalar, represented by its monic member (or zero).
class PolynomialCosetRing {
 public:
  explicit PolynomialCosetRing(GaloisField field);

  const GaloisField& field() const { return field_; }
  FieldPoly canonical(const FieldPoly& f) const;
  /// x + y = {canonical(x t + y s) : t, s nonzero scalars}, sorted.
  std::vector<FieldPoly> sum(const FieldPoly& x, const FieldPoly& y) const;
  FieldPoly mul(const FieldPoly& x, const FieldPoly& y) const { return canonical(x * y); }

  /// Zero followed by every monic polynomial of degree at most max_degree,
  /// in poly_less order.
  std::vector<FieldPoly> elements(unsigned max_degree) const;
  /// Additive table on elements(max_degree); degree-bounded cosets are
  /// closed under the hypersum.
  MultiOpTable table(unsigned max_degree) const;

 private:
  GaloisField field_;
};

/// Orders polynomials by degree, then coefficient vector low degree first.
bool poly_less(const FieldPoly& a, const FieldPoly& b);

/// A rational function up to a nonzero scalar: coprime numerator and
/// denominator, both monic; zero is 0/1.
struct BoundedFraction {
  FieldPoly numerator;
  FieldPoly denominator;

  /// Larger of the two degrees (0 for zero).
  int height() const;
  std::string to_string() const;

  friend bool operator==(const BoundedFraction&, const BoundedFraction&) = default;
  friend bool operator<(const BoundedFraction& a, const BoundedFraction& b);
};

/// Throws invalid_argument for a zero denominator.
BoundedFraction make_fraction(const FieldPoly& numerator, const FieldPoly& denominator);

struct FractionSum {
  IndexSet members;
  /// Some member of the sum has a numerator or denominator beyond the cap.
  bool escaped = false;
};

/// Fr(R) for R = F_q[X] mod F_q^x, restricted to fractions whose numerator
/// and denominator have degree at most the cap. Index 0 is zero.
class BoundedFractionField {
 public:
  BoundedFractionField(PolynomialCosetRing ring, unsigned cap);

  const PolynomialCosetRing& ring() const { return ring_; }
  unsigned cap() const { return cap_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<BoundedFraction>& elements() const { return elements_; }
  const BoundedFraction& element(Index i) const { return elements_[i]; }
  std::optional<Index> index_of(const BoundedFraction& f) const;

  /// x/x' + y/y' = {z/(x'y') : z in xy' + yx'} restricted to the cap.
  const FractionSum& sum(Index i, Index j) const { return sums_[i * elements_.size() + j]; }
  /// Product, or nothing when it leaves the cap.
  std::optional<Index> mul(Index i, Index j) const;
  std::size_t escaped_sums() const;

 private:
  PolynomialCosetRing ring_;
  unsigned cap_;
  std::vector<BoundedFraction> elements_;
  std::vector<FractionSum> sums_;
};

/// Throws invalid_argument when cap < 1.
BoundedFractionField build_fraction_hyperfield(const PolynomialCosetRing& ring, unsigned cap);

/// Membership in the factor hyperfield F_q(X) mod F_q^x computed directly in
/// the rational function field: z = x t + y s for some nonzero scalars t, s.
bool rational_factor_membership(const GaloisField& field, const BoundedFraction& x, const BoundedFraction& y,
                                const BoundedFraction& z);

struct FractionComparison {
  std::uint64_t pairs = 0;
  std::uint64_t escaped_pairs = 0;
  /// Triples (x, y, z) whose sum x + y stays within the cap.
  std::uint64_t triples = 0;
  std::uint64_t mismatches = 0;
  /// In-cap z tested against sums that also have out-of-cap members; kept
  /// apart from the counts above.
  std::uint64_t escaped_triples = 0;
  std::uint64_t escaped_mismatches = 0;
  /// Up to ten (x, y, z) index triples where the two routes disagree.
  std::vector<std::array<Index, 3>> mismatch_witnesses;
};

/// Compares every in-cap triple of the bounded fraction hyperfield against
/// rational_factor_membership. Pairs whose sum escapes the cap are tallied
/// separately from the main counts.
FractionComparison compare_with_rational_route(const BoundedFractionField& fr, unsigned jobs = 1);

}  // namespace hyperlab
