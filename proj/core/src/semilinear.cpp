#include "hyperlab/semilinear.hpp"

#include "hyperlab/error.hpp"

#include <algorithm>

namespace hyperlab {

Elem determinant(const GaloisField& field, Matrix m) {
  const std::size_t n = m.size();
  Elem det = field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return field.zero();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = field.neg(det);
    }
    det = field.mul(det, m[col][col]);
    const Elem inv = field.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Elem factor = field.mul(m[r][col], inv);
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] = field.sub(m[r][c], field.mul(factor, m[col][c]));
    }
  }
  return det;
}

SemilinearMap::SemilinearMap(GaloisField field, Matrix matrix, unsigned frobenius_power)
    : field_(std::move(field)), matrix_(std::move(matrix)), power_(frobenius_power % field_.absolute_degree()) {
  if (matrix_.empty()) throw Error(ErrorCode::invalid_argument, "empty matrix");
  for (const auto& row : matrix_) {
    if (row.size() != matrix_.size()) throw Error(ErrorCode::invalid_argument, "matrix is not square");
    for (Elem e : row)
      if (e >= field_.order()) throw Error(ErrorCode::invalid_argument, "matrix entry outside the field");
  }
  if (determinant(field_, matrix_) == 0) throw Error(ErrorCode::invalid_argument, "singular matrix");
}

SemilinearMap SemilinearMap::identity(const GaloisField& field, std::size_t size) {
  Matrix m(size, std::vector<Elem>(size, field.zero()));
  for (std::size_t i = 0; i < size; ++i) m[i][i] = field.one();
  return SemilinearMap(field, std::move(m), 0);
}

std::vector<Elem> SemilinearMap::apply(std::span<const Elem> v) const {
  if (v.size() != size()) throw Error(ErrorCode::invalid_argument, "vector length does not match the map");
  const auto theta = frobenius(field_, power_);
  std::vector<Elem> out(size(), field_.zero());
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c) out[r] = field_.add(out[r], field_.mul(matrix_[r][c], theta(v[c])));
  return out;
}

SemilinearMap SemilinearMap::compose(const SemilinearMap& inner) const {
  if (!(inner.field_ == field_) || inner.size() != size()) throw Error(ErrorCode::incompatible_field, "maps do not compose");
  const auto theta = frobenius(field_, power_);
  Matrix m(size(), std::vector<Elem>(size(), field_.zero()));
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c)
      for (std::size_t k = 0; k < size(); ++k)
        m[r][c] = field_.add(m[r][c], field_.mul(matrix_[r][k], theta(inner.matrix_[k][c])));
  return SemilinearMap(field_, std::move(m), power_ + inner.power_);
}

PointId apply_semilinear(const ProjectiveSpace& space, const SemilinearMap& f, PointId x) {
  if (!(f.field() == space.field()) || f.size() != space.dimension() + 1)
    throw Error(ErrorCode::incompatible_field, "map does not act on this space");
  return space.index_of(f.apply(space.point(x).coords));
}

std::vector<PointId> induced_permutation(const ProjectiveSpace& space, const SemilinearMap& f) {
  std::vector<PointId> perm;
  for (PointId p = 0; p < space.point_count(); ++p) perm.push_back(apply_semilinear(space, f, p));
  if (!preserves_incidence(space, perm)) throw Error(ErrorCode::structural, "semilinear map failed to preserve incidence");
  return perm;
}

bool preserves_incidence(const ProjectiveSpace& space, std::span<const PointId> perm) {
  const std::size_t n = space.point_count();
  if (perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (PointId p : perm) {
    if (p >= n || hit[p]) return false;
    hit[p] = true;
  }
  for (const auto& l : space.lines()) {
    const Line& image = space.line(space.line_id(perm[l.points[0]], perm[l.points[1]]));
    for (PointId p : l.points)
      if (!image.contains(perm[p])) return false;
  }
  return true;
}

}  // namespace hyperlab
