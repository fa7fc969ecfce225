#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlab {

using Index = std::uint32_t;
/// Sorted, duplicate-free subset of a carrier.
using IndexSet = std::vector<Index>;

/// A finite carrier {0, ..., n-1} with an enumerated multivalued addition
/// and optionally a single-valued multiplication with a unit.
///
/// Sum sets are stored fully enumerated. Construction does not insist on
/// the hyperoperation axioms (an empty sum set is representable) so that
/// broken tables can be fed to the checkers.
class MultiOpTable {
 public:
  /// `sums` is row-major n*n; each set is sorted and deduplicated here.
  MultiOpTable(Index zero, std::vector<IndexSet> sums);
  MultiOpTable(Index zero, std::vector<IndexSet> sums, std::vector<Index> mul, Index one);

  std::size_t size() const { return size_; }
  Index zero() const { return zero_; }
  const IndexSet& sum(Index x, Index y) const { return sums_[x * size_ + y]; }
  bool contains(Index x, Index y, Index z) const;

  bool has_mul() const { return !mul_.empty(); }
  /// Throws missing_multiplication when the table has none.
  Index mul(Index x, Index y) const;
  std::optional<Index> one() const { return one_; }

  /// A boxplus B, the union of a boxplus b over members.
  IndexSet sum_sets(const IndexSet& a, const IndexSet& b) const;

  const std::vector<IndexSet>& sums() const { return sums_; }
  const std::vector<Index>& mul_table() const { return mul_; }

  /// The same carrier and sums with the multiplication dropped.
  MultiOpTable additive() const;

  /// Optional human-readable names, one per carrier element.
  const std::vector<std::string>& labels() const { return labels_; }
  MultiOpTable with_labels(std::vector<std::string> labels) const;

  /// Line-oriented text form:
  ///   carrier n / zero i / [one i] / sum i j : k1 k2 ... / [mul i j : k]
  /// with every pair listed in row-major order.
  std::string serialize() const;
  static MultiOpTable parse(std::string_view text);

  friend bool operator==(const MultiOpTable& a, const MultiOpTable& b) {
    return a.size_ == b.size_ && a.zero_ == b.zero_ && a.sums_ == b.sums_ && a.mul_ == b.mul_ && a.one_ == b.one_;
  }

 private:
  void validate() const;

  std::size_t size_ = 0;
  Index zero_ = 0;
  std::vector<IndexSet> sums_;
  std::vector<Index> mul_;
  std::optional<Index> one_;
  std::vector<std::string> labels_;
};

/// z in x boxplus y.
inline bool hypersum_membership(const MultiOpTable& h, Index x, Index y, Index z) { return h.contains(x, y, z); }

}  // namespace hyperlab
