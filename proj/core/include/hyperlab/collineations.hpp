#pragma once

#include "hyperlab/projective_space.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hyperlab {

using Permutation = std::vector<PointId>;

struct CollineationReport {
  std::uint64_t count = 0;
  /// Generators as arrays of point images.
  std::vector<Permutation> generators;
  /// |PGammaL(n+1, q)| from the order formula, for n >= 2.
  std::optional<std::uint64_t> expected;
  /// Dimension one: every bijection is a collineation.
  bool single_line = false;
};

/// q^(n(n+1)/2) * prod_{i=2}^{n+1} (q^i - 1) * e for q = p^e. Throws
/// too_large if the value does not fit in 64 bits.
std::uint64_t pgammal_order(std::uint64_t q, unsigned n);

/// Calls visit for every incidence-preserving bijection of the points of a
/// space of dimension at least 2, in lexicographic order of the images of a
/// fixed frame. visit returns false to stop early.
void for_each_collineation(const ProjectiveSpace& space, const std::function<bool(const Permutation&)>& visit);

/// Counts collineations and extracts a generating set. Dimension one is
/// handled in closed form ((q+1)! with a transposition and a full cycle as
/// generators). Throws too_large above guard points.
CollineationReport enumerate_collineations(const ProjectiveSpace& space, std::size_t guard = 30);

}  // namespace hyperlab
