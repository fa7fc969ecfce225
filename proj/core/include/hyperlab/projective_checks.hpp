#pragma once

#include "hyperlab/axiom_report.hpp"
#include "hyperlab/multi_op_table.hpp"
#include "hyperlab/projective_space.hpp"

#include <vector>

namespace hyperlab {

/// Exhaustive check of the projective geometry axioms "P1" (exactly one
/// stored line through two points, equal to the enumerated line), "P2" (the
/// Veblen-Young condition, quantified literally) and "P3" (at least four
/// points per line). Throws excluded_field over F_2.
AxiomReport check_projective_axioms(const ProjectiveSpace& space);

/// Exhaustive search for Desargues configurations around every center.
/// Violations are recorded under "DS" with witness (z, x1, y1, x2, y2, x3, y3);
/// counters["configurations"] counts configurations meeting the hypotheses.
/// Throws dimension for n < 2 and excluded_field over F_2.
AxiomReport check_desargues(const ProjectiveSpace& space, unsigned jobs = 1);

/// The hypergroup on points plus zero: index 0 is zero and point i is index
/// i + 1; x + y is the line through x and y minus both, x + x = {0, x}.
/// Throws excluded_field over F_2.
MultiOpTable incidence_hypergroup(const ProjectiveSpace& space);

/// Point set and lines recovered from a hypergroup: every x + y together
/// with x and y, for distinct nonzero x, y. Lines are sorted and distinct.
struct IncidenceGeometry {
  std::vector<Index> points;
  std::vector<std::vector<Index>> lines;

  bool operator==(const IncidenceGeometry&) const = default;
};

IncidenceGeometry geometry_from_hypergroup(const MultiOpTable& h);
/// The geometry of the space in the index convention of incidence_hypergroup.
IncidenceGeometry geometry_of(const ProjectiveSpace& space);

}  // namespace hyperlab
