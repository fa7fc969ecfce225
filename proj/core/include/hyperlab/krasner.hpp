#pragma once

#include "hyperlab/local_number.hpp"
#include "hyperlab/valuation.hpp"

namespace hyperlab {

/// Valuation of a lower bound for the minimum distance between roots of a
/// monic separable polynomial with integral coefficients: nu(disc)/2.
/// Throws reducible_polynomial when p visibly factors: a square discriminant
/// in degree 2 (odd characteristic for F_q((t))), or a simple root modulo
/// the uniformizer for residue fields of at most 2^16 elements. Other
/// factorizations in degree >= 3 are not detected.
/// Every pairwise distance is at most 1, so the minimum distance is at least
/// |disc|^(1/2); the bound is exact in degree 2.
ValExponent krasner_radius_bound(const Poly<Rationals>& p, const LocalFieldSpec& spec);
ValExponent krasner_radius_bound(const SeriesPoly& p, const LocalFieldSpec& spec);

enum class KrasnerVerdict { certified_isomorphic, inconclusive };

std::string_view to_string(KrasnerVerdict v);

struct KrasnerResult {
  KrasnerVerdict verdict = KrasnerVerdict::inconclusive;
  ValExponent resultant_valuation = ValExponent::infinity();
  /// nu(Res(p, q)) / d: the common valuation of q at every root of p.
  ValExponent conjugate_valuation = ValExponent::infinity();
  ValExponent radius_valuation = 0;
  /// d * nu(r): q is certified when conjugate_valuation exceeds this.
  ValExponent threshold = 0;
};

/// Sufficient test that F[X]/(q) is isomorphic to F[X]/(p): |q(x_i)| < r^d at
/// the roots x_i of p, with r the root-separation bound above. Returns
/// inconclusive whenever the test does not apply; it never claims the
/// extensions differ. p must be irreducible: otherwise Krasner's inclusion
/// F(x) in F(y) does not force equality, so p is screened as above.
KrasnerResult krasner_separates(const Poly<Rationals>& p, const Poly<Rationals>& q, const LocalFieldSpec& spec);
KrasnerResult krasner_separates(const SeriesPoly& p, const SeriesPoly& q, const LocalFieldSpec& spec);

}  // namespace hyperlab
