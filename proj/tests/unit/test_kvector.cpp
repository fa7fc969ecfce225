#include "hyperlab/error.hpp"
#include "hyperlab/factor_hyperfield.hpp"
#include "hyperlab/kvector_space.hpp"
#include "hyperlab/projective_checks.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hyperlab;

namespace {

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::usage;
}

FactorHyperfield factor(std::uint32_t q, unsigned n) {
  const auto k = GaloisField::of_order(q);
  const auto big = GaloisField::extension(k, find_irreducible(k, n + 1));
  return build_factor_hyperfield(big, Subgroup::subfield_units(big, q));
}

}  // namespace

TEST_CASE("wrapping requires x + x = {0, x}") {
  const auto f9 = GaloisField::of_order(9);
  CHECK_NOTHROW(KVectorSpace(krasner_hyperfield()));
  CHECK(code_of([&] { KVectorSpace(build_factor_hyperfield(f9, Subgroup::of_order(f9, 4)).table); }) ==
        ErrorCode::structural);
  CHECK(code_of([] { KVectorSpace(incidence_hypergroup(ProjectiveSpace(GaloisField::of_order(7), 2))); }) ==
        ErrorCode::too_large);
}

TEST_CASE("independence") {
  const auto a = factor(3, 1);
  const KVectorSpace v(a.table);
  const Index one = a.class_of[1], i = a.class_of[3];
  for (Index x = 1; x < v.size(); ++x) CHECK(is_independent(v, std::vector<Index>{x}).independent);
  CHECK(is_independent(v, std::vector<Index>{one, i}).independent);
  CHECK(is_independent(v, std::vector<Index>{one, one}).independent);
  const auto with_zero = is_independent(v, std::vector<Index>{0, one});
  CHECK_FALSE(with_zero.independent);
  CHECK(with_zero.reason == "contains zero");
  // Three classes in a two-dimensional space are dependent.
  const auto three = is_independent(v, std::vector<Index>{1, 2, 3});
  CHECK_FALSE(three.independent);
  CHECK(oracle::zero_in_sum(a.table, three.witness));
}

TEST_CASE("bases and dimension") {
  const KVectorSpace k(krasner_hyperfield());
  CHECK(find_basis(k) == std::vector<Index>{1});
  CHECK(dimension(k).dimension == 1);

  for (auto [q, n] : {std::pair{3u, 1u}, {3u, 2u}, {4u, 1u}, {4u, 2u}, {5u, 1u}, {5u, 2u}}) {
    CAPTURE(q);
    CAPTURE(n);
    const auto a = factor(q, n);
    const KVectorSpace v(a.table.additive());
    const auto d = dimension(v, 99);
    CHECK(d.dimension == n + 1);
    CHECK(d.shuffled_orders == 20);
    for (Index b : d.basis) CHECK(b != 0);

    // The classes of the power basis 1, X, ..., X^n form a basis.
    std::vector<Index> power;
    for (unsigned k2 = 0; k2 <= n; ++k2) {
      std::vector<Elem> c(n + 1, 0);
      c[k2] = 1;
      power.push_back(a.class_of[a.field.from_coeffs(c)]);
    }
    CHECK(is_independent(v, power).independent);
    CHECK(spans(v, power));
  }

  const KVectorSpace h(incidence_hypergroup(ProjectiveSpace(GaloisField::prime(5), 1)));
  CHECK(dimension(h).dimension == 2);
  const auto h3 = incidence_hypergroup(ProjectiveSpace(GaloisField::prime(3), 2));
  CHECK(dimension(KVectorSpace(h3)).dimension == 3);
  CHECK(oracle::max_independent_size(h3) == 3);
}
