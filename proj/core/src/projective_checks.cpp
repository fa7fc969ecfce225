#include "hyperlab/projective_checks.hpp"

#include "findings.hpp"
#include "hyperlab/error.hpp"

#include <algorithm>

namespace hyperlab {

namespace {

using detail::Findings;
using detail::note;

std::vector<PointId> meet(const Line& a, const Line& b) {
  std::vector<PointId> out;
  std::set_intersection(a.points.begin(), a.points.end(), b.points.begin(), b.points.end(), std::back_inserter(out));
  return out;
}

/// No three of the distinct members of pts are collinear.
bool in_general_position(const ProjectiveSpace& s, std::vector<PointId> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (s.collinear(pts[i], pts[j], pts[k])) return false;
  return true;
}

std::string coords_text(const ProjectiveSpace& s, PointId p) {
  std::string out = "(";
  const auto& c = s.point(p).coords;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + s.field().format(c[i]);
  return out + ")";
}

}  // namespace

AxiomReport check_projective_axioms(const ProjectiveSpace& space) {
  require_not_f2(space, "the projective axiom check");
  const std::size_t n = space.point_count();
  Findings f;

  std::vector<std::uint32_t> through(n * n, 0);
  for (const auto& l : space.lines())
    for (PointId a : l.points)
      for (PointId b : l.points)
        if (a != b) ++through[a * n + b];
  for (PointId x = 0; x < n; ++x)
    for (PointId y = x + 1; y < n; ++y) {
      if (through[x * n + y] != 1)
        note(f, "P1", {x, y}, [&] { return std::to_string(through[x * n + y]) + " lines through the pair"; });
      else if (space.line_of(x, y).points != space.line(space.line_id(x, y)).points)
        note(f, "P1", {x, y}, [] { return "enumerated line differs from the stored line"; });
    }

  for (PointId x = 0; x < n; ++x)
    for (PointId y = 0; y < n; ++y) {
      if (x == y) continue;
      const Line& xy = space.line(space.line_id(x, y));
      for (PointId z = 0; z < n; ++z) {
        if (xy.contains(z)) continue;
        const Line& xz = space.line(space.line_id(x, z));
        const Line& yz = space.line(space.line_id(y, z));
        for (PointId t : xy.points) {
          if (t == x) continue;
          for (PointId u : xz.points) {
            if (u == x) continue;
            if (meet(yz, space.line(space.line_id(t, u))).empty())
              note(f, "P2", {x, y, z, t, u}, [] { return "l(y,z) and l(t,u) are disjoint"; });
          }
        }
      }
    }

  for (LineId l = 0; l < space.line_count(); ++l)
    if (space.line(l).points.size() < 4)
      note(f, "P3", {l}, [&] { return std::to_string(space.line(l).points.size()) + " points on the line"; });

  AxiomReport report;
  detail::emit(report, f, {"P1", "P2", "P3"});
  report.counters["points"] = n;
  report.counters["lines"] = space.line_count();
  return report;
}

AxiomReport check_desargues(const ProjectiveSpace& space, unsigned jobs) {
  if (space.dimension() < 2) throw Error(ErrorCode::dimension, "Desargues' axiom needs dimension at least 2");
  require_not_f2(space, "the Desargues check");

  struct Arm {
    PointId x, y;
    LineId line;
  };
  std::vector<std::uint64_t> configurations(space.point_count(), 0);

  Findings f = detail::scan_ranges(space.point_count(), jobs, [&](std::size_t begin, std::size_t end, Findings& out) {
    for (auto z = static_cast<PointId>(begin); z < end; ++z) {
      std::vector<Arm> arms;
      for (LineId l : space.lines_through(z))
        for (PointId x : space.line(l).points)
          for (PointId y : space.line(l).points)
            if (x != y) arms.push_back({x, y, l});

      for (const auto& a1 : arms)
        for (const auto& a2 : arms) {
          if (a2.line == a1.line) continue;
          for (const auto& a3 : arms) {
            if (a3.line == a1.line || a3.line == a2.line) continue;
            std::vector<PointId> six{a1.x, a2.x, a3.x, a1.y, a2.y, a3.y};
            std::sort(six.begin(), six.end());
            if (std::adjacent_find(six.begin(), six.end()) != six.end()) continue;
            const Line pair{meet(space.line(a1.line), space.line(a2.line)), a1.x, a2.x};
            if (meet(pair, space.line(a3.line)) != std::vector<PointId>{z}) continue;
            if (!in_general_position(space, {a1.x, a2.x, a3.x, z}) || !in_general_position(space, {a1.y, a2.y, a3.y, z}))
              continue;
            ++configurations[z];

            const Arm* arm[3] = {&a1, &a2, &a3};
            PointId axis[3] = {0, 0, 0};  // z12, z23, z31
            bool determined = true;
            for (int k = 0; k < 3; ++k) {
              const Arm& i = *arm[k];
              const Arm& j = *arm[(k + 1) % 3];
              const auto m = meet(space.line(space.line_id(i.x, j.x)), space.line(space.line_id(i.y, j.y)));
              if (m.size() != 1) {
                determined = false;
                break;
              }
              axis[k] = m.front();
            }
            std::vector<std::uint32_t> witness{z, a1.x, a1.y, a2.x, a2.y, a3.x, a3.y};
            if (!determined) {
              note(out, "DS", witness, [] { return "intersection points z_ij not uniquely determined"; });
              continue;
            }
            if (axis[0] == axis[1] || !space.line(space.line_id(axis[0], axis[1])).contains(axis[2]))
              note(out, "DS", witness, [&] {
                return "z12=" + coords_text(space, axis[0]) + " z23=" + coords_text(space, axis[1]) +
                       " z31=" + coords_text(space, axis[2]) + " not collinear";
              });
          }
        }
    }
  });

  AxiomReport report;
  detail::emit(report, f, {"DS"});
  std::uint64_t total = 0;
  for (auto c : configurations) total += c;
  report.counters["configurations"] = total;
  return report;
}

MultiOpTable incidence_hypergroup(const ProjectiveSpace& space) {
  require_not_f2(space, "the incidence hypergroup");
  const std::size_t points = space.point_count();
  const std::size_t n = points + 1;
  std::vector<IndexSet> sums(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      auto& s = sums[x * n + y];
      if (x == 0 || y == 0) {
        s = {x == 0 ? y : x};
      } else if (x == y) {
        s = {0, x};
      } else {
        for (PointId p : space.line(space.line_id(x - 1, y - 1)).points)
          if (p + 1 != x && p + 1 != y) s.push_back(p + 1);
      }
    }
  std::vector<std::string> labels{"0"};
  for (PointId p = 0; p < points; ++p) labels.push_back(coords_text(space, p));
  return MultiOpTable(0, std::move(sums)).with_labels(std::move(labels));
}

IncidenceGeometry geometry_from_hypergroup(const MultiOpTable& h) {
  IncidenceGeometry g;
  for (Index x = 0; x < h.size(); ++x)
    if (x != h.zero()) g.points.push_back(x);
  for (Index x : g.points)
    for (Index y : g.points) {
      if (y <= x) continue;
      auto line = h.sum(x, y);
      line.push_back(x);
      line.push_back(y);
      std::sort(line.begin(), line.end());
      g.lines.push_back(std::move(line));
    }
  std::sort(g.lines.begin(), g.lines.end());
  g.lines.erase(std::unique(g.lines.begin(), g.lines.end()), g.lines.end());
  return g;
}

IncidenceGeometry geometry_of(const ProjectiveSpace& space) {
  IncidenceGeometry g;
  for (PointId p = 0; p < space.point_count(); ++p) g.points.push_back(p + 1);
  for (const auto& l : space.lines()) {
    std::vector<Index> shifted;
    for (PointId p : l.points) shifted.push_back(p + 1);
    g.lines.push_back(std::move(shifted));
  }
  std::sort(g.lines.begin(), g.lines.end());
  return g;
}

}  // namespace hyperlab
