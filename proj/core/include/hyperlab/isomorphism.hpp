#pragma once

#include "hyperlab/multi_op_table.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hyperlab {

/// Checks that map is a zero-preserving bijection a -> b with
/// map(x + y) = map(x) + map(y), and multiplicative (unit to unit) when
/// both tables carry a multiplication.
bool is_isomorphism(const MultiOpTable& a, const MultiOpTable& b, std::span<const Index> map);

/// Backtracking search for an isomorphism a -> b. Candidates are pruned by
/// the multiset of sum-set sizes per element, then by propagating images of
/// sums through already-assigned pairs. The result is verified with
/// is_isomorphism before it is returned.
std::optional<std::vector<Index>> find_isomorphism(const MultiOpTable& a, const MultiOpTable& b);

}  // namespace hyperlab
