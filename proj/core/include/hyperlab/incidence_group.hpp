#pragma once

#include "hyperlab/axiom_report.hpp"
#include "hyperlab/galois_field.hpp"
#include "hyperlab/projective_space.hpp"

#include <vector>

namespace hyperlab {

/// A binary operation on the points of a projective space, stored as a
/// full table, with a designated identity point.
class IncidenceGroup {
 public:
  IncidenceGroup(ProjectiveSpace space, std::vector<PointId> table, PointId identity);

  const ProjectiveSpace& space() const { return space_; }
  std::size_t size() const { return space_.point_count(); }
  PointId identity() const { return identity_; }
  PointId op(PointId a, PointId b) const { return table_[a * size() + b]; }
  const std::vector<PointId>& table() const { return table_; }

  /// Order of a under the operation; 0 if its powers never reach the identity.
  std::uint64_t element_order(PointId a) const;
  bool is_cyclic() const;

 private:
  ProjectiveSpace space_;
  std::vector<PointId> table_;
  PointId identity_;
};

/// Identifies P^n(F_q) with F_{q^(n+1)}^x / F_q^x through the power basis of
/// F_q[X]/(modulus): the point (c0, ..., cn) is the class of
/// c0 + c1 X + ... + cn X^n. The operation is multiplication of classes.
/// Throws incompatible_field when the modulus lives over another field,
/// degree_mismatch unless deg = n + 1, reducible_modulus otherwise.
IncidenceGroup build_incidence_group(const ProjectiveSpace& space, const FieldPoly& modulus);

/// Exhaustive check of "closure", "identity", "associativity",
/// "commutativity", "inverse" and "incidence" (every translate of every line
/// is a line of the space).
AxiomReport verify_incidence_group(const IncidenceGroup& group);

}  // namespace hyperlab
