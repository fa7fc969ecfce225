#include "hyperlab/kvector_space.hpp"

#include "hyperlab/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <random>
#include <set>

namespace hyperlab {

namespace {

using Bits = boost::dynamic_bitset<>;

constexpr std::size_t kMaxCarrier = 50;
constexpr std::size_t kMaxSubsetBits = 24;

Bits add(const MultiOpTable& h, const Bits& a, Index y) {
  Bits out(h.size());
  for (auto x = a.find_first(); x != Bits::npos; x = a.find_next(x))
    for (Index z : h.sum(static_cast<Index>(x), y)) out.set(z);
  return out;
}

Bits single(std::size_t n, Index x) {
  Bits b(n);
  b.set(x);
  return b;
}

/// Iterated sums over every subset of a growing list, indexed by bitmask.
class SubsetSums {
 public:
  explicit SubsetSums(const MultiOpTable& h) : h_(h), sums_{Bits(h.size())} {}

  /// Sum over the subset mask of the current members plus y, for all masks
  /// with at least one member; returns the first mask whose sum meets 0.
  std::optional<std::uint64_t> zero_with(Index y) const {
    for (std::uint64_t mask = 1; mask < sums_.size(); ++mask)
      if (add(h_, sums_[mask], y).test(h_.zero())) return mask;
    return std::nullopt;
  }

  void push(Index y) {
    if (members_.size() >= kMaxSubsetBits) throw Error(ErrorCode::too_large, "subset enumeration too large");
    const std::size_t old = sums_.size();
    sums_.reserve(old * 2);
    sums_.push_back(single(h_.size(), y));
    for (std::uint64_t mask = 1; mask < old; ++mask) sums_.push_back(add(h_, sums_[mask], y));
    members_.push_back(y);
  }

  std::vector<Index> members_of(std::uint64_t mask) const {
    std::vector<Index> out;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (mask >> i & 1) out.push_back(members_[i]);
    return out;
  }

 private:
  const MultiOpTable& h_;
  std::vector<Bits> sums_;
  std::vector<Index> members_;
};

std::vector<Index> as_set(const KVectorSpace& v, std::span<const Index> s) {
  std::vector<Index> out(s.begin(), s.end());
  for (Index x : out)
    if (x >= v.size()) throw Error(ErrorCode::invalid_argument, "element outside the carrier");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

KVectorSpace::KVectorSpace(MultiOpTable table) : table_(std::move(table)) {
  if (table_.size() > kMaxCarrier)
    throw Error(ErrorCode::too_large, "carrier of " + std::to_string(table_.size()) + " exceeds " + std::to_string(kMaxCarrier));
  const Index zero = table_.zero();
  for (Index x = 0; x < table_.size(); ++x) {
    IndexSet expected = x == zero ? IndexSet{zero} : IndexSet{std::min(zero, x), std::max(zero, x)};
    if (table_.sum(x, x) != expected)
      throw Error(ErrorCode::structural, "x + x != {0, x} for x = " + std::to_string(x));
  }
}

IndependenceResult is_independent(const KVectorSpace& v, std::span<const Index> s) {
  const auto set = as_set(v, s);
  const auto& h = v.table();
  if (std::binary_search(set.begin(), set.end(), h.zero())) return {false, "contains zero", {h.zero()}};
  SubsetSums sums(h);
  for (Index y : set) {
    if (auto mask = sums.zero_with(y)) {
      auto witness = sums.members_of(*mask);
      witness.push_back(y);
      return {false, "zero lies in the sum of a subset", witness};
    }
    sums.push(y);
  }
  return {true, "", {}};
}

bool spans(const KVectorSpace& v, std::span<const Index> s) {
  const auto set = as_set(v, s);
  const auto& h = v.table();
  const std::size_t n = h.size();
  if (set.empty()) return n == 1;
  // level = all elements of some s1 + ... + sk for the current k.
  Bits level(n), covered(n);
  for (Index x : set) level.set(x);
  std::set<Bits> seen;
  while (seen.insert(level).second) {
    covered |= level;
    Bits next(n);
    for (Index x : set) next |= add(h, level, x);
    level = std::move(next);
  }
  covered.set(h.zero());
  return covered.all();
}

std::vector<Index> find_basis(const KVectorSpace& v, std::span<const Index> order) {
  const auto& h = v.table();
  SubsetSums sums(h);
  std::vector<Index> basis;
  for (Index y : order) {
    if (y >= v.size()) throw Error(ErrorCode::invalid_argument, "element outside the carrier");
    if (y == h.zero() || std::find(basis.begin(), basis.end(), y) != basis.end()) continue;
    if (sums.zero_with(y)) continue;
    sums.push(y);
    basis.push_back(y);
  }
  if (!spans(v, basis)) throw Error(ErrorCode::structural, "maximal independent set does not span");
  return basis;
}

std::vector<Index> find_basis(const KVectorSpace& v) {
  std::vector<Index> order(v.size());
  for (Index i = 0; i < order.size(); ++i) order[i] = i;
  return find_basis(v, order);
}

DimensionResult dimension(const KVectorSpace& v, std::uint64_t seed, unsigned shuffled_orders) {
  DimensionResult result;
  result.basis = find_basis(v);
  result.dimension = result.basis.size();
  result.seed = seed;
  result.shuffled_orders = shuffled_orders;
  std::mt19937_64 rng(seed);
  std::vector<Index> order(v.size());
  for (Index i = 0; i < order.size(); ++i) order[i] = i;
  for (unsigned k = 0; k < shuffled_orders; ++k) {
    std::shuffle(order.begin(), order.end(), rng);
    const auto other = find_basis(v, order);
    if (other.size() != result.dimension)
      throw Error(ErrorCode::structural, "greedy bases of sizes " + std::to_string(result.dimension) + " and " +
                                             std::to_string(other.size()) + " found");
  }
  return result;
}

}  // namespace hyperlab
