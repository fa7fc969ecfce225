#include "hyperlab/isomorphism.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace hyperlab {

namespace {

using Bits = boost::dynamic_bitset<>;

bool use_mul(const MultiOpTable& a, const MultiOpTable& b) { return a.has_mul() && b.has_mul(); }

std::vector<std::vector<std::size_t>> signatures(const MultiOpTable& h, bool with_mul) {
  const std::size_t n = h.size();
  std::vector<std::vector<std::size_t>> sig(n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) sig[x].push_back(h.sum(x, y).size());
    std::sort(sig[x].begin(), sig[x].end());
    sig[x].push_back(h.sum(x, x).size());
    if (with_mul) {
      // Multiplicative order of x (0 when x is never a power back to one).
      std::size_t order = 0;
      Index p = x;
      for (std::size_t k = 1; k <= n; ++k, p = h.mul(p, x))
        if (p == *h.one()) {
          order = k;
          break;
        }
      sig[x].push_back(order);
    }
  }
  return sig;
}

class Search {
 public:
  Search(const MultiOpTable& a, const MultiOpTable& b) : a_(a), b_(b), n_(a.size()), mul_(use_mul(a, b)) {
    sum_b_.assign(n_ * n_, Bits(n_));
    for (Index x = 0; x < n_; ++x)
      for (Index y = 0; y < n_; ++y)
        for (Index z : b.sum(x, y)) sum_b_[x * n_ + y].set(z);
  }

  std::optional<std::vector<Index>> run() {
    const auto sa = signatures(a_, mul_);
    const auto sb = signatures(b_, mul_);
    std::vector<Bits> domains(n_, Bits(n_));
    for (Index x = 0; x < n_; ++x)
      for (Index u = 0; u < n_; ++u)
        if (sa[x] == sb[u]) domains[x].set(u);
    image_.assign(n_, kUnassigned);
    if (!assign(a_.zero(), b_.zero(), domains)) return std::nullopt;
    if (mul_ && !assign(*a_.one(), *b_.one(), domains)) return std::nullopt;
    if (!solve(domains)) return std::nullopt;
    return image_;
  }

 private:
  static constexpr Index kUnassigned = ~Index{0};

  bool assign(Index x, Index u, std::vector<Bits>& domains) {
    if (image_[x] != kUnassigned) return image_[x] == u;
    if (!domains[x].test(u)) return false;
    image_[x] = u;
    assigned_.push_back(x);
    domains[x].reset();
    domains[x].set(u);
    for (Index w = 0; w < n_; ++w)
      if (w != x && image_[w] == kUnassigned) {
        domains[w].reset(u);
        if (domains[w].none()) return false;
      }
    for (Index y : assigned_) {
      const Index v = image_[y];
      if (!constrain(a_.sum(x, y), sum_b_[u * n_ + v], domains)) return false;
      if (!constrain(a_.sum(y, x), sum_b_[v * n_ + u], domains)) return false;
      if (mul_) {
        if (!restrict_to(a_.mul(x, y), b_.mul(u, v), domains)) return false;
        if (!restrict_to(a_.mul(y, x), b_.mul(v, u), domains)) return false;
      }
    }
    return true;
  }

  bool constrain(const IndexSet& source, const Bits& target, std::vector<Bits>& domains) const {
    if (source.size() != target.count()) return false;
    for (Index z : source) {
      if (image_[z] != kUnassigned) {
        if (!target.test(image_[z])) return false;
        continue;
      }
      domains[z] &= target;
      if (domains[z].none()) return false;
    }
    return true;
  }

  bool restrict_to(Index z, Index w, std::vector<Bits>& domains) const {
    if (image_[z] != kUnassigned) return image_[z] == w;
    if (!domains[z].test(w)) return false;
    domains[z].reset();
    domains[z].set(w);
    return true;
  }

  bool solve(const std::vector<Bits>& domains) {
    Index best = kUnassigned;
    std::size_t best_size = n_ + 1;
    for (Index x = 0; x < n_; ++x)
      if (image_[x] == kUnassigned && domains[x].count() < best_size) {
        best = x;
        best_size = domains[x].count();
      }
    if (best == kUnassigned) return is_isomorphism(a_, b_, image_);
    for (auto u = domains[best].find_first(); u != Bits::npos; u = domains[best].find_next(u)) {
      auto next = domains;
      const auto saved_image = image_;
      const auto saved_assigned = assigned_.size();
      if (assign(best, static_cast<Index>(u), next) && solve(next)) return true;
      image_ = saved_image;
      assigned_.resize(saved_assigned);
    }
    return false;
  }

  const MultiOpTable& a_;
  const MultiOpTable& b_;
  std::size_t n_;
  bool mul_;
  std::vector<Bits> sum_b_;
  std::vector<Index> image_;
  std::vector<Index> assigned_;
};

}  // namespace

bool is_isomorphism(const MultiOpTable& a, const MultiOpTable& b, std::span<const Index> map) {
  const std::size_t n = a.size();
  if (b.size() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Index u : map) {
    if (u >= n || hit[u]) return false;
    hit[u] = true;
  }
  if (map[a.zero()] != b.zero()) return false;
  const bool mul = use_mul(a, b);
  if (mul && map[*a.one()] != *b.one()) return false;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      IndexSet image;
      for (Index z : a.sum(x, y)) image.push_back(map[z]);
      std::sort(image.begin(), image.end());
      if (image != b.sum(map[x], map[y])) return false;
      if (mul && map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
    }
  return true;
}

std::optional<std::vector<Index>> find_isomorphism(const MultiOpTable& a, const MultiOpTable& b) {
  if (a.size() != b.size()) return std::nullopt;
  return Search(a, b).run();
}

}  // namespace hyperlab
