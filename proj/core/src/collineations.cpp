#include "hyperlab/collineations.hpp"

#include "hyperlab/error.hpp"
#include "hyperlab/rational.hpp"
#include "hyperlab/semilinear.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace hyperlab {

namespace {

using Mask = std::uint64_t;

/// Standard basis points followed by (1, ..., 1), then every other point.
std::vector<PointId> frame_first_order(const ProjectiveSpace& space) {
  const std::size_t dim = space.dimension() + 1;
  std::vector<PointId> order;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Elem> e(dim, 0);
    e[i] = 1;
    order.push_back(space.index_of(e));
  }
  order.push_back(space.index_of(std::vector<Elem>(dim, 1)));
  for (PointId p = 0; p < space.point_count(); ++p)
    if (std::find(order.begin(), order.end(), p) == order.end()) order.push_back(p);
  return order;
}

class Backtrack {
 public:
  Backtrack(const ProjectiveSpace& space, const std::function<bool(const Permutation&)>& visit)
      : space_(space), visit_(visit), n_(space.point_count()), order_(frame_first_order(space)) {
    for (const auto& l : space.lines()) {
      Mask m = 0;
      for (PointId p : l.points) m |= Mask{1} << p;
      line_masks_.push_back(m);
    }
  }

  void run() {
    const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    std::vector<Mask> domains(n_, all);
    image_.assign(n_, kUnset);
    step(0, domains);
  }

 private:
  static constexpr PointId kUnset = ~PointId{0};

  bool assign(PointId x, PointId u, std::vector<Mask>& domains) {
    image_[x] = u;
    for (PointId w = 0; w < n_; ++w)
      if (image_[w] == kUnset) {
        domains[w] &= ~(Mask{1} << u);
        if (!domains[w]) return false;
      }
    for (std::size_t k = 0; k < assigned_.size(); ++k) {
      const PointId y = assigned_[k];
      const Line& l = space_.line(space_.line_id(x, y));
      const Mask target = line_masks_[space_.line_id(u, image_[y])];
      for (PointId c : l.points) {
        if (image_[c] != kUnset) {
          if (!(target >> image_[c] & 1)) return false;
          continue;
        }
        domains[c] &= target;
        if (!domains[c]) return false;
      }
    }
    assigned_.push_back(x);
    return true;
  }

  bool step(std::size_t depth, const std::vector<Mask>& domains) {
    if (depth == n_) {
      if (!preserves_incidence(space_, image_)) throw Error(ErrorCode::structural, "search produced a non-collineation");
      return visit_(image_);
    }
    const PointId x = order_[depth];
    for (Mask m = domains[x]; m; m &= m - 1) {
      const auto u = static_cast<PointId>(std::countr_zero(m));
      auto next = domains;
      const auto saved = assigned_.size();
      const bool ok = assign(x, u, next);
      if (ok && !step(depth + 1, next)) return false;
      for (std::size_t k = saved; k < assigned_.size(); ++k) image_[assigned_[k]] = kUnset;
      image_[x] = kUnset;
      assigned_.resize(saved);
    }
    return true;
  }

  const ProjectiveSpace& space_;
  const std::function<bool(const Permutation&)>& visit_;
  std::size_t n_;
  std::vector<PointId> order_;
  std::vector<Mask> line_masks_;
  Permutation image_;
  std::vector<PointId> assigned_;
};

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

/// The subgroup generated so far, kept as a closed set of permutations.
class Closure {
 public:
  explicit Closure(std::size_t n) {
    Permutation id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<PointId>(i);
    elements_.insert(id);
  }

  bool contains(const Permutation& p) const { return elements_.contains(p); }

  void add_generator(const Permutation& g) {
    generators_.push_back(g);
    std::vector<Permutation> frontier(elements_.begin(), elements_.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& e : frontier)
        for (const auto& s : generators_) {
          auto p = compose(s, e);
          if (elements_.insert(p).second) next.push_back(std::move(p));
        }
      frontier = std::move(next);
    }
  }

  const std::vector<Permutation>& generators() const { return generators_; }
  std::size_t size() const { return elements_.size(); }

 private:
  std::set<Permutation> elements_;
  std::vector<Permutation> generators_;
};

}  // namespace

std::uint64_t pgammal_order(std::uint64_t q, unsigned n) {
  std::uint64_t p = 2;
  while (q % p) ++p;
  unsigned e = 0;
  for (std::uint64_t r = q; r > 1; r /= p) ++e;
  BigInt order = 1;
  for (unsigned i = 0; i < n * (n + 1) / 2; ++i) order *= q;
  for (unsigned i = 2; i <= n + 1; ++i) {
    BigInt qi = 1;
    for (unsigned k = 0; k < i; ++k) qi *= q;
    order *= qi - 1;
  }
  order *= e;
  if (order > std::numeric_limits<std::uint64_t>::max()) throw Error(ErrorCode::too_large, "group order exceeds 64 bits");
  return static_cast<std::uint64_t>(order);
}

void for_each_collineation(const ProjectiveSpace& space, const std::function<bool(const Permutation&)>& visit) {
  if (space.dimension() < 2) throw Error(ErrorCode::dimension, "line-preserving search needs dimension at least 2");
  if (space.point_count() > 64) throw Error(ErrorCode::too_large, "at most 64 points supported");
  Backtrack(space, visit).run();
}

CollineationReport enumerate_collineations(const ProjectiveSpace& space, std::size_t guard) {
  const std::size_t n = space.point_count();
  if (n > guard) throw Error(ErrorCode::too_large, std::to_string(n) + " points exceed the guard of " + std::to_string(guard));
  CollineationReport report;
  if (space.dimension() == 1) {
    report.single_line = true;
    report.count = 1;
    for (std::uint64_t k = 2; k <= n; ++k) report.count *= k;
    Permutation swap(n), cycle(n);
    for (std::size_t i = 0; i < n; ++i) {
      swap[i] = static_cast<PointId>(i);
      cycle[i] = static_cast<PointId>((i + 1) % n);
    }
    std::swap(swap[0], swap[1]);
    report.generators = {swap, cycle};
    return report;
  }

  Closure group(n);
  for_each_collineation(space, [&](const Permutation& p) {
    ++report.count;
    if (!group.contains(p)) group.add_generator(p);
    return true;
  });
  if (group.size() != report.count)
    throw Error(ErrorCode::structural, "generated group order differs from the enumerated count");
  report.generators = group.generators();
  report.expected = pgammal_order(space.field().order(), space.dimension());
  return report;
}

}  // namespace hyperlab
