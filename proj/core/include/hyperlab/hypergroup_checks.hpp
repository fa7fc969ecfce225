#pragma once

#include "hyperlab/axiom_report.hpp"
#include "hyperlab/multi_op_table.hpp"

namespace hyperlab {

/// Exhaustive check of the canonical hypergroup axioms. Axioms, in report
/// order: "nonempty", "neutral", "CH1" (associativity of set-sums), "CH2"
/// (commutativity), "CH3" (unique negative), "CH4" (reversibility).
/// Reproductivity x+H = H is recorded under properties["reproductive"].
AxiomReport check_canonical_hypergroup(const MultiOpTable& h, unsigned jobs = 1);

/// Hyperring axioms on top of the hypergroup ones (reported as "HR1:<axiom>"):
/// "HR2" (commutative associative multiplication, 0 absorbing), "unit",
/// "HR3" (x(y+z) = xy + xz as sets). With require_hyperfield, also
/// "hyperfield" (nonzero elements form a group). properties["hyperfield"]
/// records the group condition either way.
/// Throws missing_multiplication for tables without multiplication.
AxiomReport check_hyperring(const MultiOpTable& h, bool require_hyperfield = false, unsigned jobs = 1);

/// The index y with 0 in x+y, when unique.
std::optional<Index> negative(const MultiOpTable& h, Index x);

}  // namespace hyperlab
