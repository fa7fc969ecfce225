#include "hyperlab/hypergroup_checks.hpp"

#include "findings.hpp"
#include "hyperlab/error.hpp"

#include <boost/dynamic_bitset.hpp>

namespace hyperlab {

namespace {

using Bits = boost::dynamic_bitset<>;
using detail::Findings;
using detail::note;

std::string set_text(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string set_text(const Bits& b) {
  IndexSet s;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) s.push_back(static_cast<Index>(i));
  return set_text(s);
}

std::vector<Bits> sum_bits(const MultiOpTable& h) {
  const std::size_t n = h.size();
  std::vector<Bits> bits(n * n, Bits(n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z : h.sum(x, y)) bits[x * n + y].set(z);
  return bits;
}

}  // namespace

std::optional<Index> negative(const MultiOpTable& h, Index x) {
  std::optional<Index> found;
  for (Index y = 0; y < h.size(); ++y)
    if (h.contains(x, y, h.zero())) {
      if (found) return std::nullopt;
      found = y;
    }
  return found;
}

AxiomReport check_canonical_hypergroup(const MultiOpTable& h, unsigned jobs) {
  const std::size_t n = h.size();
  const Index zero = h.zero();
  const auto bits = sum_bits(h);
  auto cell = [&](Index x, Index y) -> const Bits& { return bits[x * n + y]; };

  Findings pairs;
  std::vector<std::optional<Index>> neg(n);
  for (Index x = 0; x < n; ++x) {
    std::uint64_t negatives = 0;
    for (Index y = 0; y < n; ++y) {
      if (h.sum(x, y).empty()) note(pairs, "nonempty", {x, y}, [] { return "empty sum"; });
      if (h.sum(x, y) != h.sum(y, x))
        note(pairs, "CH2", {x, y}, [&] { return set_text(h.sum(x, y)) + " != " + set_text(h.sum(y, x)); });
      if (cell(x, y).test(zero)) {
        ++negatives;
        neg[x] = y;
      }
    }
    const IndexSet single{x};
    if (h.sum(x, zero) != single || h.sum(zero, x) != single)
      note(pairs, "neutral", {x}, [&] { return "x+0 = " + set_text(h.sum(x, zero)) + ", 0+x = " + set_text(h.sum(zero, x)); });
    if (negatives != 1) {
      neg[x].reset();
      note(pairs, "CH3", {x}, [&] { return std::to_string(negatives) + " elements y with 0 in x+y"; });
    }
  }

  Findings triples = detail::scan_ranges(n, jobs, [&](std::size_t begin, std::size_t end, Findings& f) {
    Bits left(n), right(n);
    for (Index x = static_cast<Index>(begin); x < end; ++x)
      for (Index y = 0; y < n; ++y)
        for (Index z = 0; z < n; ++z) {
          left.reset();
          right.reset();
          for (Index a : h.sum(x, y)) left |= cell(a, z);
          for (Index b : h.sum(y, z)) right |= cell(x, b);
          if (left != right)
            note(f, "CH1", {x, y, z}, [&] { return "(x+y)+z = " + set_text(left) + ", x+(y+z) = " + set_text(right); });
          if (neg[x] && cell(x, y).test(z) && !cell(z, *neg[x]).test(y))
            note(f, "CH4", {x, y, z}, [&] { return "z in x+y but y not in z+(-x)"; });
        }
  });
  for (auto& [axiom, finding] : triples) pairs[axiom] = std::move(finding);

  AxiomReport report;
  detail::emit(report, pairs, {"nonempty", "neutral", "CH1", "CH2", "CH3", "CH4"});

  bool reproductive = true;
  for (Index x = 0; x < n && reproductive; ++x) {
    Bits all(n);
    for (Index y = 0; y < n; ++y) all |= cell(x, y);
    reproductive = all.all();
  }
  report.properties["reproductive"] = reproductive;
  return report;
}

AxiomReport check_hyperring(const MultiOpTable& h, bool require_hyperfield, unsigned jobs) {
  if (!h.has_mul() || !h.one()) throw Error(ErrorCode::missing_multiplication, "hyperring check needs multiplication and unit");
  const std::size_t n = h.size();
  const Index zero = h.zero(), one = *h.one();

  AxiomReport report;
  report.absorb(check_canonical_hypergroup(h, jobs), "HR1:");

  Findings f;
  for (Index x = 0; x < n; ++x) {
    if (h.mul(one, x) != x || h.mul(x, one) != x)
      note(f, "unit", {x}, [&] { return "1*x = " + std::to_string(h.mul(one, x)) + ", x*1 = " + std::to_string(h.mul(x, one)); });
    if (h.mul(zero, x) != zero || h.mul(x, zero) != zero) note(f, "HR2", {zero, x}, [] { return "zero is not absorbing"; });
    for (Index y = 0; y < n; ++y)
      if (h.mul(x, y) != h.mul(y, x)) note(f, "HR2", {x, y}, [] { return "multiplication not commutative"; });
  }
  if (one == zero) note(f, "unit", {one}, [] { return "one equals zero"; });

  Findings triples = detail::scan_ranges(n, jobs, [&](std::size_t begin, std::size_t end, Findings& out) {
    std::vector<bool> lhs(n), rhs(n);
    for (Index x = static_cast<Index>(begin); x < end; ++x)
      for (Index y = 0; y < n; ++y)
        for (Index z = 0; z < n; ++z) {
          if (h.mul(h.mul(x, y), z) != h.mul(x, h.mul(y, z)))
            note(out, "HR2", {x, y, z}, [] { return "multiplication not associative"; });
          std::fill(lhs.begin(), lhs.end(), false);
          std::fill(rhs.begin(), rhs.end(), false);
          for (Index s : h.sum(y, z)) lhs[h.mul(x, s)] = true;
          for (Index s : h.sum(h.mul(x, y), h.mul(x, z))) rhs[s] = true;
          if (lhs != rhs) note(out, "HR3", {x, y, z}, [] { return "x(y+z) != xy + xz"; });
        }
  });
  // Pair and triple scans both feed HR2; keep the lexicographically smaller witness.
  for (auto& [axiom, finding] : triples) {
    auto& m = f[axiom];
    if (m.count == 0 || finding.witness < m.witness) {
      m.witness = finding.witness;
      m.detail = finding.detail;
    }
    m.count += finding.count;
  }

  bool group = one != zero;
  for (Index x = 0; x < n && group; ++x) {
    if (x == zero) continue;
    bool invertible = false;
    for (Index y = 0; y < n; ++y) {
      if (y == zero) continue;
      if (h.mul(x, y) == zero) {
        group = false;
        break;
      }
      if (h.mul(x, y) == one) invertible = true;
    }
    group = group && invertible;
  }
  report.properties["hyperfield"] = group;
  if (require_hyperfield && !group) note(f, "hyperfield", {}, [] { return "nonzero elements do not form a group"; });

  std::vector<std::string> order{"HR2", "unit", "HR3"};
  if (require_hyperfield) order.push_back("hyperfield");
  detail::emit(report, f, order);
  return report;
}

}  // namespace hyperlab
