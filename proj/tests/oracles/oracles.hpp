#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls the routine it is meant to check.

#include "hyperlab/factor_hyperfield.hpp"
#include "hyperlab/galois_field.hpp"
#include "hyperlab/multi_op_table.hpp"
#include "hyperlab/projective_space.hpp"
#include "hyperlab/rational.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using hyperlab::BigInt;
using hyperlab::Elem;
using hyperlab::GaloisField;
using hyperlab::Index;
using hyperlab::IndexSet;
using hyperlab::MultiOpTable;
using hyperlab::PointId;
using hyperlab::ProjectiveSpace;
using hyperlab::Rational;

/// Laplace expansion along the first row.
Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m);

/// Sylvester matrix written out directly from the coefficient lists
/// (high degree first), resultant by cofactor expansion.
Rational resultant_by_cofactors(const std::vector<Rational>& f_low_first, const std::vector<Rational>& g_low_first);

/// All x in [0, m) with x^2 = a mod m.
std::vector<std::uint64_t> square_roots_mod(std::int64_t a, std::uint64_t m);

/// |U / U^2| for the unit group U of Z/p^k, by listing squares.
std::uint64_t unit_square_index_mod(std::uint64_t p, unsigned k);

/// |U / U^2| for the units of F_q[t]/(t^k), by listing squares.
std::uint64_t unit_square_index_series(const GaloisField& f, unsigned k);

/// Class of a nonzero integer in Q_p^x / (Q_p^x)^2 decided by residues:
/// (valuation parity, unit class index among the squares mod p^k).
std::pair<int, std::uint64_t> integer_square_class(std::int64_t d, std::uint64_t p, unsigned k);

/// Monic f over F_p (coefficients low first, leading 1) is irreducible iff no
/// monic polynomial of degree 1..deg/2 divides it; tested by long division.
bool irreducible_by_trial_division(std::uint32_t p, const std::vector<std::uint32_t>& f);

/// {x t + y s : t, s in T} as a set of field elements.
std::set<Elem> literal_sum(const GaloisField& f, const std::vector<Elem>& T, Elem x, Elem y);

/// |PGammaL(n+1, q)| as |GL(n+1, q)| / (q - 1) * e, with |GL| as the
/// product of (q^(n+1) - q^i).
std::uint64_t pgammal_by_counting(std::uint64_t q, unsigned n);

/// Point permutations induced by every invertible matrix and Frobenius
/// power, collected as a set (matrices enumerated exhaustively).
std::set<std::vector<PointId>> semilinear_permutations(const ProjectiveSpace& space);

/// Permutations of all points mapping every line into a line, by trying
/// every permutation. Only for spaces with at most 9 points.
std::uint64_t collineations_by_permutations(const ProjectiveSpace& space);

/// 0 in the left-associated sum of the listed elements, folding raw sets.
bool zero_in_sum(const MultiOpTable& h, const std::vector<Index>& elems);

/// Largest independent subset size by checking every subset.
std::size_t max_independent_size(const MultiOpTable& h);

}  // namespace oracle
