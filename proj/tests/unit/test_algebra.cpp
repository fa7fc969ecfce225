#include "hyperlab/error.hpp"
#include "hyperlab/galois_field.hpp"
#include "hyperlab/polynomial.hpp"
#include "hyperlab/rational.hpp"
#include "hyperlab/valuation.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hyperlab;

namespace {

Poly<Rationals> qpoly(std::vector<Rational> c) { return Poly<Rationals>(Rationals{}, std::move(c)); }

FieldPoly fpoly(const GaloisField& f, std::vector<Elem> c) { return FieldPoly(f, std::move(c)); }

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

}  // namespace

TEST_CASE("prime field arithmetic matches integers mod p") {
  const auto f = GaloisField::prime(7);
  for (Elem a = 0; a < 7; ++a)
    for (Elem b = 0; b < 7; ++b) {
      CHECK(f.add(a, b) == (a + b) % 7);
      CHECK(f.mul(a, b) == (a * b) % 7);
    }
  CHECK(code_of([&] { f.inv(0); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { GaloisField::prime(9); }) == ErrorCode::invalid_prime);
}

TEST_CASE("extension fields satisfy the field axioms") {
  for (auto q : {4u, 8u, 9u, 25u, 27u}) {
    const auto f = GaloisField::of_order(q);
    CAPTURE(q);
    CHECK(f.order() == q);
    for (Elem a = 0; a < q; ++a) {
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
      CHECK(f.add(a, f.neg(a)) == f.zero());
      for (Elem b = 0; b < q; ++b) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (Elem c = 0; c < q; c += 3) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    CHECK(f.multiplicative_order(f.primitive_element()) == q - 1);
  }
}

TEST_CASE("towers embed the base field") {
  const auto f4 = GaloisField::of_order(4);
  const auto f16 = GaloisField::extension(f4, find_irreducible(f4, 2));
  CHECK(f16.order() == 16);
  CHECK(f16.absolute_degree() == 4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      CHECK(f16.add(a, b) == f4.add(a, b));
      CHECK(f16.mul(a, b) == f4.mul(a, b));
    }
}

TEST_CASE("cross-field arithmetic is rejected") {
  const FieldElement a(GaloisField::prime(3), 1);
  const FieldElement b(GaloisField::prime(5), 1);
  CHECK(code_of([&] { (void)(a + b); }) == ErrorCode::incompatible_field);
  CHECK(code_of([&] { (void)(fpoly(GaloisField::prime(3), {1, 1}) * fpoly(GaloisField::prime(5), {1})); }) ==
        ErrorCode::incompatible_field);
}

TEST_CASE("polynomial gcd") {
  const auto f5 = GaloisField::prime(5);
  CHECK(poly_gcd(fpoly(f5, {4, 0, 1}), fpoly(f5, {4, 1})) == fpoly(f5, {4, 1}));
  CHECK(poly_gcd(fpoly(f5, {2, 4}), FieldPoly(f5)) == fpoly(f5, {3, 1}));

  // X^9 - X over F_3 has derivative -1, so the gcd is 1; every factor of
  // X^9 - X appears once, consistent with trial division finding squarefree
  // irreducible factors only.
  const auto f3 = GaloisField::prime(3);
  const auto g = fpoly(f3, {0, 2, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(derivative(g) == fpoly(f3, {2}));
  CHECK(poly_gcd(g, derivative(g)).degree() == 0);
}

TEST_CASE("resultant agrees with cofactor expansion") {
  CHECK(poly_resultant(qpoly({1, 0, 1}), qpoly({1, 1, 1})) == 1);
  CHECK(oracle::resultant_by_cofactors({1, 0, 1}, {1, 1, 1}) == 1);
  CHECK(poly_resultant(qpoly({-5, 0, 1}), qpoly({-30, 0, 1})) == 625);
  // Res(X - a, g) = g(a).
  const auto g = qpoly({3, -2, 0, 1});
  CHECK(poly_resultant(qpoly({-7, 1}), g) == g(7));
  CHECK(code_of([] { poly_resultant(Poly<Rationals>(Rationals{}), qpoly({1, 1})); }) == ErrorCode::undefined_resultant);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> a(1 + trial % 4), b(1 + (trial / 4) % 4);
    for (auto& c : a) c = coeff(rng);
    for (auto& c : b) c = coeff(rng);
    a.push_back(1 + trial % 3);
    b.push_back(1);
    CHECK(poly_resultant(qpoly(a), qpoly(b)) == oracle::resultant_by_cofactors(a, b));
  }
}

TEST_CASE("discriminant") {
  for (int b = -4; b <= 4; ++b)
    for (int c = -4; c <= 4; ++c) CHECK(poly_discriminant(qpoly({c, b, 1})) == b * b - 4 * c);
  CHECK(poly_discriminant(qpoly({-5, 0, 1})) == 20);
  // Roots 0, 1, -1: product of squared differences is 1 * 1 * 4.
  CHECK(poly_discriminant(qpoly({0, -1, 0, 1})) == 4);
  CHECK(code_of([] { poly_discriminant(qpoly({3})); }) == ErrorCode::undefined_discriminant);
}

TEST_CASE("irreducible search and irreducibility test") {
  const auto f3 = GaloisField::prime(3);
  const auto f2 = GaloisField::prime(2);
  CHECK(find_irreducible(f3, 1) == fpoly(f3, {0, 1}));
  CHECK(find_irreducible(f3, 2) == fpoly(f3, {1, 0, 1}));
  CHECK(find_irreducible(f2, 3) == fpoly(f2, {1, 1, 0, 1}));
  CHECK(find_irreducible(f3, 3) == fpoly(f3, {1, 2, 0, 1}));

  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned d = 1; d <= 4; ++d) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= p;
      const auto fp = GaloisField::prime(p);
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> c(d + 1, 1);
        std::uint64_t rest = code;
        for (unsigned i = 0; i < d; ++i) {
          c[i] = static_cast<std::uint32_t>(rest % p);
          rest /= p;
        }
        CAPTURE(p);
        CAPTURE(code);
        CHECK(is_irreducible(fpoly(fp, {c.begin(), c.end()})) == oracle::irreducible_by_trial_division(p, c));
      }
    }
  CHECK(code_of([&] { GaloisField::extension(f3, fpoly(f3, {2, 0, 1})); }) == ErrorCode::reducible_modulus);
}

TEST_CASE("frobenius") {
  const auto f9 = GaloisField::of_order(9);
  const auto id = frobenius(f9, 0);
  const auto phi = frobenius(f9, 1);
  for (Elem a = 0; a < 9; ++a) {
    CHECK(id(a) == a);
    CHECK(phi(phi(a)) == a);
    CHECK(phi(a) == f9.pow(a, 3));
  }
  for (Elem a = 0; a < 3; ++a) CHECK(phi(a) == a);
  CHECK(frobenius(f9, 5).power() == 1);
  CHECK(frobenius(f9, -1).power() == 1);
}

TEST_CASE("p-adic and h-adic valuations") {
  CHECK(padic_norm_rational(12, 2) == ValExponent(2));
  CHECK(padic_norm_rational(0, 5).is_infinite());
  CHECK(padic_norm_rational(Rational(5, 10), 5) == ValExponent(0));
  CHECK(padic_norm_rational(Rational(3, 50), 5) == ValExponent(-2));
  CHECK(code_of([] { padic_norm_rational(3, 6); }) == ErrorCode::invalid_prime);

  const auto f3 = GaloisField::prime(3);
  const auto t = fpoly(f3, {0, 1});
  const auto one = fpoly(f3, {1});
  CHECK(hadic_norm_ratfunc({fpoly(f3, {0, 0, 1, 1}), one}, t) == ValExponent(2));
  CHECK(hadic_norm_ratfunc({fpoly(f3, {2}), one}, fpoly(f3, {1, 0, 1})) == ValExponent(0));
  CHECK(hadic_norm_ratfunc({fpoly(f3, {1, 0, 1}), fpoly(f3, {0, 0, 0, 0, 0, 1})}, t, FunctionNorm::degree) ==
        ValExponent(3));
  CHECK(code_of([&] { hadic_norm_ratfunc({one, one}, fpoly(f3, {2, 0, 1})); }) == ErrorCode::reducible_modulus);
  CHECK(code_of([&] { hadic_norm_ratfunc({FieldPoly(f3), FieldPoly(f3)}, t); }) == ErrorCode::invalid_argument);
}

TEST_CASE("valuation exponents are exact") {
  const ValExponent half(Rational(1, 2));
  CHECK(half.to_string() == "1/2");
  CHECK(ValExponent::infinity() > ValExponent(1000));
  CHECK((half + half) == ValExponent(1));
  CHECK((ValExponent::infinity() + half).is_infinite());
}
