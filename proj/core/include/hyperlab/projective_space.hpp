#pragma once

#include "hyperlab/galois_field.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlab {

using PointId = std::uint32_t;
using LineId = std::uint32_t;

/// Homogeneous coordinates scaled so the first nonzero coordinate is 1.
struct ProjPoint {
  std::vector<Elem> coords;

  /// Throws invalid_argument for the zero vector.
  static ProjPoint canonical(const GaloisField& field, std::vector<Elem> coords);
  auto operator<=>(const ProjPoint&) const = default;
};

struct Line {
  /// Sorted point ids.
  std::vector<PointId> points;
  PointId first = 0;
  PointId second = 0;

  bool contains(PointId p) const;
};

/// P^n over a finite field. Points are numbered in lexicographic order of
/// their canonical coordinates; lines in order of their smallest point pair.
/// Immutable and cheap to copy.
class ProjectiveSpace {
 public:
  ProjectiveSpace(GaloisField field, unsigned n);

  const GaloisField& field() const { return impl_->field; }
  unsigned dimension() const { return impl_->n; }
  std::size_t point_count() const { return impl_->points.size(); }
  std::size_t line_count() const { return impl_->lines.size(); }

  const ProjPoint& point(PointId id) const { return impl_->points.at(id); }
  /// Canonicalizes first; throws invalid_argument for wrong length or zero.
  PointId index_of(std::span<const Elem> coords) const;

  /// The line through two distinct points, enumerated from the definition
  /// {[a x + b y] : a, b nonzero} together with x and y. Throws degenerate_line.
  Line line_of(PointId x, PointId y) const;
  /// Id of the stored line through two distinct points.
  LineId line_id(PointId x, PointId y) const;
  const Line& line(LineId id) const { return impl_->lines.at(id); }
  const std::vector<Line>& lines() const { return impl_->lines; }
  const std::vector<LineId>& lines_through(PointId p) const { return impl_->pencils.at(p); }
  bool collinear(PointId a, PointId b, PointId c) const;

  /// "space q=<q> n=<n> modulus=<c0,c1,...>"; the modulus is omitted for
  /// prime fields and listed low-to-high over F_p otherwise.
  std::string descriptor() const;
  static ProjectiveSpace parse_descriptor(std::string_view text);

  friend bool operator==(const ProjectiveSpace& a, const ProjectiveSpace& b) {
    return a.impl_ == b.impl_ || (a.impl_->field == b.impl_->field && a.impl_->n == b.impl_->n);
  }

 private:
  struct Impl {
    Impl(GaloisField f, unsigned dim) : field(std::move(f)), n(dim) {}

    GaloisField field;
    unsigned n = 0;
    std::vector<ProjPoint> points;
    std::vector<PointId> by_code;
    std::vector<Line> lines;
    std::vector<LineId> line_table;
    std::vector<std::vector<LineId>> pencils;
  };

  std::uint64_t code(std::span<const Elem> coords) const;

  std::shared_ptr<const Impl> impl_;
};

/// Throws excluded_field for q = 2, where lines have only three points.
void require_not_f2(const ProjectiveSpace& space, std::string_view what);

}  // namespace hyperlab
