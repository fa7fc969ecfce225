#pragma once

#include "hyperlab/galois_field.hpp"
#include "hyperlab/projective_space.hpp"

#include <span>
#include <vector>

namespace hyperlab {

using Matrix = std::vector<std::vector<Elem>>;

/// v -> M * theta^k(v) with theta the Frobenius x -> x^p, applied
/// coordinatewise.
class SemilinearMap {
 public:
  /// Throws invalid_argument for a singular or non-square matrix.
  SemilinearMap(GaloisField field, Matrix matrix, unsigned frobenius_power = 0);
  static SemilinearMap identity(const GaloisField& field, std::size_t size);

  const GaloisField& field() const { return field_; }
  std::size_t size() const { return matrix_.size(); }
  const Matrix& matrix() const { return matrix_; }
  /// Normalized modulo the absolute degree of the field.
  unsigned frobenius_power() const { return power_; }

  std::vector<Elem> apply(std::span<const Elem> v) const;
  /// this after inner: (M, k) o (M', k') = (M * theta^k(M'), k + k').
  SemilinearMap compose(const SemilinearMap& inner) const;

 private:
  GaloisField field_;
  Matrix matrix_;
  unsigned power_;
};

Elem determinant(const GaloisField& field, Matrix m);

/// The induced point map [v] -> [f(v)].
PointId apply_semilinear(const ProjectiveSpace& space, const SemilinearMap& f, PointId x);

/// Point permutation induced by f. Throws structural if it fails to map
/// lines onto lines.
std::vector<PointId> induced_permutation(const ProjectiveSpace& space, const SemilinearMap& f);

/// The permutation is a bijection that maps every line onto a line.
bool preserves_incidence(const ProjectiveSpace& space, std::span<const PointId> perm);

}  // namespace hyperlab
