#pragma once

#include "hyperlab/galois_field.hpp"
#include "hyperlab/multi_op_table.hpp"

#include <span>
#include <vector>

namespace hyperlab {

/// A subgroup of the multiplicative group of a finite field.
class Subgroup {
 public:
  /// Closure of the generators under multiplication. Zero or out-of-range
  /// generators throw not_a_subgroup / invalid_argument.
  static Subgroup generated_by(const GaloisField& field, std::span<const Elem> generators);
  /// Checks that the listed elements contain 1 and are closed under
  /// multiplication; throws not_a_subgroup otherwise.
  static Subgroup from_elements(const GaloisField& field, std::vector<Elem> elements);
  /// The unique subgroup of the given order; the order must divide q-1.
  static Subgroup of_order(const GaloisField& field, std::uint64_t order);
  /// Units of the subfield with sub_order elements (x^sub_order = x).
  static Subgroup subfield_units(const GaloisField& field, std::uint32_t sub_order);
  /// Every subgroup, by increasing order.
  static std::vector<Subgroup> all(const GaloisField& field);

  const GaloisField& field() const { return field_; }
  /// Sorted element indices.
  const std::vector<Elem>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Elem x) const;

 private:
  Subgroup(GaloisField field, std::vector<Elem> elements) : field_(std::move(field)), elements_(std::move(elements)) {}

  GaloisField field_;
  std::vector<Elem> elements_;
};

/// Krasner's factor hyperfield A_T. Carrier index 0 is the zero class; the
/// other classes are ordered by their canonical representative, the orbit
/// member whose coefficient vector (low degree first) is lexicographically
/// least.
struct FactorHyperfield {
  GaloisField field;
  Subgroup subgroup;
  MultiOpTable table;
  /// Canonical representative per carrier index.
  std::vector<Elem> representatives;
  /// Carrier index per field element.
  std::vector<Index> class_of;
};

FactorHyperfield build_factor_hyperfield(const GaloisField& field, const Subgroup& subgroup);

/// Both sides of the subfield criterion, computed independently.
struct SubfieldVerdict {
  /// 1T + 1T = {0T, 1T} in the factor table.
  bool sum_criterion = false;
  /// T together with 0 is closed under addition.
  bool additively_closed = false;

  bool agree() const { return sum_criterion == additively_closed; }
};

SubfieldVerdict subfield_criterion(const GaloisField& field, const Subgroup& subgroup);

/// The hyperfield K = {0, 1} with 1 + 1 = {0, 1}.
MultiOpTable krasner_hyperfield();

}  // namespace hyperlab
