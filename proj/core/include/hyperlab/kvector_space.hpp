#pragma once

#include "hyperlab/multi_op_table.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hyperlab {

/// A canonical hypergroup with x + x = {0, x} for every x, i.e. a vector
/// space over the Krasner hyperfield K.
class KVectorSpace {
 public:
  /// Throws structural if x + x = {0, x} fails anywhere (the first failing
  /// x is named), too_large above 50 elements.
  explicit KVectorSpace(MultiOpTable table);

  const MultiOpTable& table() const { return table_; }
  std::size_t size() const { return table_.size(); }

 private:
  MultiOpTable table_;
};

struct IndependenceResult {
  bool independent = false;
  std::string reason;
  /// Smallest subset (by enumeration order) whose sum contains 0.
  std::vector<Index> witness;
};

/// S is treated as a set. Independent when no subset of two or more
/// distinct members has 0 in its iterated sum; 0 in S is rejected outright.
IndependenceResult is_independent(const KVectorSpace& v, std::span<const Index> s);

/// Every nonzero element outside S lies in some s1 + ... + sk with si in S
/// (repetition allowed).
bool spans(const KVectorSpace& v, std::span<const Index> s);

/// Greedy basis over the given element order (carrier order by default).
/// Throws structural when the saturated independent set fails to span.
std::vector<Index> find_basis(const KVectorSpace& v);
std::vector<Index> find_basis(const KVectorSpace& v, std::span<const Index> order);

struct DimensionResult {
  std::size_t dimension = 0;
  std::vector<Index> basis;
  unsigned shuffled_orders = 0;
  std::uint64_t seed = 0;
};

/// Size of the canonical-order basis, cross-checked against greedy bases
/// over shuffled orders drawn from the seed. A disagreement throws structural.
DimensionResult dimension(const KVectorSpace& v, std::uint64_t seed = 0, unsigned shuffled_orders = 20);

}  // namespace hyperlab
