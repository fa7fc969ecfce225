#include "hyperlab/incidence_group.hpp"

#include "findings.hpp"
#include "hyperlab/error.hpp"

#include <algorithm>

namespace hyperlab {

using detail::note;

IncidenceGroup::IncidenceGroup(ProjectiveSpace space, std::vector<PointId> table, PointId identity)
    : space_(std::move(space)), table_(std::move(table)), identity_(identity) {
  if (table_.size() != size() * size()) throw Error(ErrorCode::invalid_argument, "operation table has wrong size");
  if (identity_ >= size()) throw Error(ErrorCode::invalid_argument, "identity outside the point set");
}

std::uint64_t IncidenceGroup::element_order(PointId a) const {
  PointId p = a;
  for (std::uint64_t k = 1; k <= size(); ++k, p = op(p, a))
    if (p == identity_) return k;
  return 0;
}

bool IncidenceGroup::is_cyclic() const {
  for (PointId a = 0; a < size(); ++a)
    if (element_order(a) == size()) return true;
  return false;
}

IncidenceGroup build_incidence_group(const ProjectiveSpace& space, const FieldPoly& modulus) {
  const auto& F = space.field();
  if (!(modulus.ring() == F)) throw Error(ErrorCode::incompatible_field, "modulus is not over the coordinate field");
  if (modulus.degree() != static_cast<int>(space.dimension()) + 1)
    throw Error(ErrorCode::degree_mismatch, "modulus must have degree n + 1 = " + std::to_string(space.dimension() + 1));
  const auto K = GaloisField::extension(F, make_monic(modulus));

  const std::size_t n = space.point_count();
  std::vector<Elem> as_elem(n);
  for (PointId p = 0; p < n; ++p) as_elem[p] = K.from_coeffs(space.point(p).coords);
  std::vector<PointId> table(n * n);
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b) table[a * n + b] = space.index_of(K.coeffs(K.mul(as_elem[a], as_elem[b])));
  std::vector<Elem> one(space.dimension() + 1, 0);
  one[0] = F.one();
  return IncidenceGroup(space, std::move(table), space.index_of(one));
}

AxiomReport verify_incidence_group(const IncidenceGroup& group) {
  const auto& space = group.space();
  const std::size_t n = group.size();
  const PointId e = group.identity();
  detail::Findings f;

  for (PointId a = 0; a < n; ++a) {
    if (group.op(e, a) != a || group.op(a, e) != a) note(f, "identity", {a}, [] { return "e*a != a or a*e != a"; });
    bool has_inverse = false;
    for (PointId b = 0; b < n; ++b) {
      if (group.op(a, b) >= n) {
        note(f, "closure", {a, b}, [] { return "product outside the point set"; });
        continue;
      }
      if (group.op(a, b) != group.op(b, a)) note(f, "commutativity", {a, b}, [] { return "a*b != b*a"; });
      if (group.op(a, b) == e && group.op(b, a) == e) has_inverse = true;
    }
    if (!has_inverse) note(f, "inverse", {a}, [] { return "no inverse"; });
  }
  if (!f.contains("closure"))
    for (PointId a = 0; a < n; ++a)
      for (PointId b = 0; b < n; ++b)
        for (PointId c = 0; c < n; ++c)
          if (group.op(group.op(a, b), c) != group.op(a, group.op(b, c)))
            note(f, "associativity", {a, b, c}, [] { return "(ab)c != a(bc)"; });

  std::uint64_t translated = 0;
  if (!f.contains("closure"))
    for (PointId a = 0; a < n; ++a)
      for (LineId l = 0; l < space.line_count(); ++l) {
        ++translated;
        const auto& pts = space.line(l).points;
        std::vector<PointId> image;
        for (PointId p : pts) image.push_back(group.op(a, p));
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        const bool is_line = image.size() == pts.size() && space.line(space.line_id(image[0], image[1])).points == image;
        if (!is_line) note(f, "incidence", {a, l}, [] { return "translate of the line is not a line"; });
      }

  AxiomReport report;
  detail::emit(report, f, {"closure", "identity", "associativity", "commutativity", "inverse", "incidence"});
  report.counters["translated_lines"] = translated;
  report.properties["cyclic"] = group.is_cyclic();
  return report;
}

}  // namespace hyperlab
