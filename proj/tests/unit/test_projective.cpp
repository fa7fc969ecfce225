#include "hyperlab/collineations.hpp"
#include "hyperlab/error.hpp"
#include "hyperlab/factor_hyperfield.hpp"
#include "hyperlab/hypergroup_checks.hpp"
#include "hyperlab/incidence_group.hpp"
#include "hyperlab/isomorphism.hpp"
#include "hyperlab/projective_checks.hpp"
#include "hyperlab/semilinear.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

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

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

PointId pt(const ProjectiveSpace& s, std::vector<Elem> c) { return s.index_of(c); }

}  // namespace

TEST_CASE("point and line counts") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u})
    for (unsigned n : {1u, 2u}) {
      const ProjectiveSpace s(GaloisField::of_order(q), n);
      CAPTURE(q);
      CAPTURE(n);
      CHECK(s.point_count() == (ipow(q, n + 1) - 1) / (q - 1));
      for (PointId p = 0; p < s.point_count(); ++p) CHECK(s.lines_through(p).size() == (ipow(q, n) - 1) / (q - 1));
      for (const auto& l : s.lines()) CHECK(l.points.size() == q + 1);
    }
}

TEST_CASE("points are canonical and lexicographically ordered") {
  const ProjectiveSpace s(GaloisField::prime(3), 2);
  for (PointId p = 0; p < s.point_count(); ++p) {
    const auto& c = s.point(p).coords;
    const auto lead = std::find_if(c.begin(), c.end(), [](Elem e) { return e != 0; });
    CHECK(*lead == 1);
    if (p > 0) CHECK(s.point(p - 1) < s.point(p));
  }
  CHECK(pt(s, {2, 2, 0}) == pt(s, {1, 1, 0}));
  CHECK(code_of([&] { pt(s, {0, 0, 0}); }) == ErrorCode::invalid_argument);
}

TEST_CASE("line through two points") {
  const ProjectiveSpace s(GaloisField::prime(3), 2);
  const auto l = s.line_of(pt(s, {1, 0, 0}), pt(s, {0, 1, 0}));
  std::vector<PointId> expected{pt(s, {1, 0, 0}), pt(s, {0, 1, 0}), pt(s, {1, 1, 0}), pt(s, {1, 2, 0})};
  std::sort(expected.begin(), expected.end());
  CHECK(l.points == expected);
  CHECK(s.line_of(pt(s, {0, 1, 0}), pt(s, {1, 0, 0})).points == expected);
  CHECK(code_of([&] { s.line_of(3, 3); }) == ErrorCode::degenerate_line);
}

TEST_CASE("space descriptors") {
  const auto s = ProjectiveSpace::parse_descriptor("space q=9 n=1 modulus=1,0,1");
  CHECK(s.point_count() == 10);
  CHECK(s.descriptor() == "space q=9 n=1 modulus=1,0,1");
  CHECK(ProjectiveSpace::parse_descriptor(s.descriptor()) == s);
  CHECK(ProjectiveSpace::parse_descriptor("space q=3 n=2").descriptor() == "space q=3 n=2");
  CHECK(code_of([] { ProjectiveSpace::parse_descriptor("space q=9 n=1 modulus=2,0,1"); }) == ErrorCode::reducible_modulus);
  CHECK(code_of([] { ProjectiveSpace::parse_descriptor("space q=3"); }) == ErrorCode::usage);
}

TEST_CASE("projective axioms") {
  CHECK(check_projective_axioms(ProjectiveSpace(GaloisField::prime(3), 1)).passed());
  const auto r = check_projective_axioms(ProjectiveSpace(GaloisField::prime(3), 2));
  CHECK(r.passed());
  CHECK(r.counters.at("points") == 13);
  CHECK(r.counters.at("lines") == 13);
  CHECK(check_projective_axioms(ProjectiveSpace(GaloisField::of_order(4), 2)).passed());
  CHECK(check_projective_axioms(ProjectiveSpace(GaloisField::prime(3), 3)).passed());
  CHECK(code_of([] { check_projective_axioms(ProjectiveSpace(GaloisField::prime(2), 2)); }) == ErrorCode::excluded_field);
}

TEST_CASE("Desargues") {
  const auto r = check_desargues(ProjectiveSpace(GaloisField::prime(3), 2));
  CHECK(r.passed());
  CHECK(r.counters.at("configurations") > 0);
  CHECK(check_desargues(ProjectiveSpace(GaloisField::of_order(4), 2), 2).passed());
  CHECK(code_of([] { check_desargues(ProjectiveSpace(GaloisField::prime(3), 1)); }) == ErrorCode::dimension);
}

TEST_CASE("incidence hypergroup") {
  const ProjectiveSpace s(GaloisField::prime(3), 1);
  const auto h = incidence_hypergroup(s);
  CHECK(h.size() == 5);
  for (Index x = 1; x < 5; ++x) {
    CHECK(h.sum(x, x) == IndexSet{0, x});
    CHECK(h.sum(x, 0) == IndexSet{x});
    for (Index y = 1; y < 5; ++y) {
      if (x == y) continue;
      IndexSet rest;
      for (Index z = 1; z < 5; ++z)
        if (z != x && z != y) rest.push_back(z);
      CHECK(h.sum(x, y) == rest);
    }
  }
  CHECK(incidence_hypergroup(ProjectiveSpace(GaloisField::prime(3), 2)).size() == 14);
  CHECK(code_of([] { incidence_hypergroup(ProjectiveSpace(GaloisField::prime(2), 2)); }) == ErrorCode::excluded_field);

  for (auto [q, n] : {std::pair{3u, 1u}, {3u, 2u}, {4u, 2u}, {5u, 1u}, {3u, 3u}}) {
    const ProjectiveSpace sp(GaloisField::of_order(q), n);
    CHECK(geometry_from_hypergroup(incidence_hypergroup(sp)) == geometry_of(sp));
  }
}

TEST_CASE("semilinear maps") {
  const auto f9 = GaloisField::of_order(9);
  const ProjectiveSpace s(f9, 1);
  const auto id = SemilinearMap::identity(f9, 2);
  for (PointId p = 0; p < s.point_count(); ++p) CHECK(apply_semilinear(s, id, p) == p);

  // Frobenius with the identity matrix fixes exactly the F_3-rational points.
  const SemilinearMap frob(f9, {{1, 0}, {0, 1}}, 1);
  std::size_t fixed = 0;
  for (PointId p = 0; p < s.point_count(); ++p) {
    const auto& c = s.point(p).coords;
    const bool rational = c[0] < 3 && c[1] < 3;
    CHECK((apply_semilinear(s, frob, p) == p) == rational);
    fixed += apply_semilinear(s, frob, p) == p;
  }
  CHECK(fixed == 4);

  const Elem a = 5;
  const SemilinearMap scalar(f9, {{a, 0}, {0, a}}, 0);
  for (PointId p = 0; p < s.point_count(); ++p) CHECK(apply_semilinear(s, scalar, p) == p);
  CHECK(code_of([&] { SemilinearMap(f9, {{1, 2}, {2, 1}}, 0); }) == ErrorCode::invalid_argument);

  // Composition of maps corresponds to composition of point maps.
  const ProjectiveSpace s4(GaloisField::of_order(4), 2);
  std::mt19937_64 rng(5);
  auto random_map = [&] {
    for (;;) {
      Matrix m(3, std::vector<Elem>(3));
      for (auto& row : m)
        for (auto& e : row) e = static_cast<Elem>(rng() % 4);
      if (determinant(s4.field(), m) != 0) return SemilinearMap(s4.field(), m, static_cast<unsigned>(rng() % 2));
    }
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_map();
    const auto g = random_map();
    const auto pf = induced_permutation(s4, f);
    const auto pg = induced_permutation(s4, g);
    const auto pfg = induced_permutation(s4, f.compose(g));
    for (PointId p = 0; p < s4.point_count(); ++p) CHECK(pfg[p] == pf[pg[p]]);
    CHECK(preserves_incidence(s4, pf));
  }
}

TEST_CASE("collineation counts") {
  const auto line = enumerate_collineations(ProjectiveSpace(GaloisField::prime(3), 1));
  CHECK(line.count == 24);
  CHECK(line.single_line);
  CHECK(oracle::collineations_by_permutations(ProjectiveSpace(GaloisField::prime(3), 1)) == 24);

  const ProjectiveSpace fano(GaloisField::prime(2), 2);
  std::uint64_t counted = 0;
  for_each_collineation(fano, [&](const Permutation&) { return ++counted, true; });
  CHECK(counted == oracle::collineations_by_permutations(fano));
  CHECK(counted == 168);

  const ProjectiveSpace s3(GaloisField::prime(3), 2);
  const auto r = enumerate_collineations(s3);
  CHECK(r.count == 5616);
  CHECK(r.expected == 5616);
  CHECK(oracle::pgammal_by_counting(3, 2) == 5616);

  // Every collineation of P^2(F_3) is induced by a matrix.
  std::set<Permutation> found;
  for_each_collineation(s3, [&](const Permutation& p) { return found.insert(p), true; });
  CHECK(found == oracle::semilinear_permutations(s3));

  const auto r4 = enumerate_collineations(ProjectiveSpace(GaloisField::of_order(4), 2));
  CHECK(r4.count == oracle::pgammal_by_counting(4, 2));
  CHECK(r4.count == 120960);
  CHECK(pgammal_order(4, 2) == 120960);
  CHECK(code_of([] { enumerate_collineations(ProjectiveSpace(GaloisField::prime(5), 2)); }) == ErrorCode::too_large);
}

TEST_CASE("incidence groups") {
  const auto f3 = GaloisField::prime(3);
  const ProjectiveSpace line(f3, 1);
  const auto g = build_incidence_group(line, FieldPoly(f3, {1, 0, 1}));
  CHECK(g.size() == 4);
  CHECK(g.is_cyclic());
  CHECK(line.point(g.identity()).coords == std::vector<Elem>{1, 0});
  CHECK(verify_incidence_group(g).passed());

  const ProjectiveSpace plane(f3, 2);
  const auto g2 = build_incidence_group(plane, FieldPoly(f3, {1, 2, 0, 1}));
  CHECK(g2.size() == 13);
  CHECK(g2.is_cyclic());
  const auto report = verify_incidence_group(g2);
  CHECK(report.passed());
  CHECK(report.counters.at("translated_lines") == 13 * 13);

  CHECK(code_of([&] { build_incidence_group(plane, FieldPoly(f3, {1, 0, 1})); }) == ErrorCode::degree_mismatch);
  CHECK(code_of([&] { build_incidence_group(plane, FieldPoly(f3, {0, 0, 0, 1})); }) == ErrorCode::reducible_modulus);

  // Swap two products: the group and incidence checks notice.
  auto table = g2.table();
  std::swap(table[1 * 13 + 2], table[1 * 13 + 3]);
  const auto scrambled = verify_incidence_group(IncidenceGroup(plane, table, g2.identity()));
  CHECK_FALSE(scrambled.passed());
  CHECK_FALSE(scrambled.passed("incidence"));
}

TEST_CASE("incidence hypergroups match factor hyperfields") {
  for (auto [q, n] : {std::pair{3u, 1u}, {4u, 1u}, {5u, 1u}, {3u, 2u}}) {
    const ProjectiveSpace s(GaloisField::of_order(q), n);
    const auto h = incidence_hypergroup(s);
    const auto big = GaloisField::extension(s.field(), find_irreducible(s.field(), n + 1));
    const auto a = build_factor_hyperfield(big, Subgroup::subfield_units(big, q)).table.additive();
    const auto w = find_isomorphism(h, a);
    REQUIRE(w.has_value());
    // The induced point bijection maps lines to lines of the factor geometry.
    const auto lines_h = geometry_from_hypergroup(h).lines;
    const auto lines_a = geometry_from_hypergroup(a).lines;
    for (const auto& l : lines_h) {
      std::vector<Index> image;
      for (Index p : l) image.push_back((*w)[p]);
      std::sort(image.begin(), image.end());
      CHECK(std::binary_search(lines_a.begin(), lines_a.end(), image));
    }
  }
}
