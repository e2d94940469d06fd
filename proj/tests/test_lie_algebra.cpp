#include "doctest.h"

#include "flatlie/constructions.hpp"
#include "flatlie/lie_algebra.hpp"

using namespace flatlie;

namespace {

Vector vec(std::initializer_list<int> entries) {
  Vector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (int e : entries)
    v(i++) = Rational(e);
  return v;
}

LieAlgebra sl2() { return catalog("sl2").algebra(); }

} // namespace

TEST_CASE("construction validates its input") {
  SparseTable ok = {{{0, 1}, {{1, Rational(1)}}}};
  CHECK_NOTHROW(LieAlgebra("aff", 2, {"x", "y"}, ok));
  CHECK_THROWS_AS(LieAlgebra("bad", -1, {}, {}), ValidationError);
  CHECK_THROWS_AS(LieAlgebra("bad", 2, {"x"}, ok), DimensionError);
  CHECK_THROWS_AS(LieAlgebra("bad", 2, {"x", "x"}, ok), ValidationError);
  CHECK_THROWS_AS(LieAlgebra("bad", 2, {"x", ""}, ok), ValidationError);
  SparseTable diag = {{{1, 1}, {{0, Rational(1)}}}};
  CHECK_THROWS_AS(LieAlgebra("bad", 2, {"x", "y"}, diag), ValidationError);
  SparseTable swapped = {{{1, 0}, {{0, Rational(1)}}}};
  CHECK_THROWS_AS(LieAlgebra("bad", 2, {"x", "y"}, swapped), ValidationError);
  SparseTable out_of_range = {{{0, 1}, {{2, Rational(1)}}}};
  CHECK_THROWS_AS(LieAlgebra("bad", 2, {"x", "y"}, out_of_range), ValidationError);
  CHECK_NOTHROW(LieAlgebra("trivial", 0, {}, {}));
}

TEST_CASE("zero coefficients are dropped on construction") {
  SparseTable t = {{{0, 1}, {{0, Rational(0)}, {1, Rational(2)}}}};
  LieAlgebra a("x", 2, {"e1", "e2"}, t);
  REQUIRE(a.brackets().count({0, 1}) == 1);
  CHECK(a.brackets().at({0, 1}).size() == 1);
  SparseTable all_zero = {{{0, 1}, {{1, Rational(0)}}}};
  CHECK(LieAlgebra("y", 2, {"e1", "e2"}, all_zero).brackets().empty());
}

TEST_CASE("bracket on basis vectors is antisymmetric") {
  LieAlgebra a = sl2(); // basis h, e, f
  CHECK(vectors_equal(a.bracket_basis(0, 1), vec({0, 2, 0})));
  CHECK(vectors_equal(a.bracket_basis(1, 0), vec({0, -2, 0})));
  CHECK(vectors_equal(a.bracket_basis(1, 2), vec({1, 0, 0})));
  CHECK(vector_is_zero(a.bracket_basis(2, 2)));
}

TEST_CASE("bracket is bilinear over combinations") {
  LieAlgebra a = sl2();
  Vector x = vec({1, 2, 0});
  Vector y = vec({0, 1, -1});
  // [h + 2e, e - f] = [h,e] - [h,f] - 2[e,f] = 2e + 2f - 2h
  CHECK(vectors_equal(a.bracket(x, y), vec({-2, 2, 2})));
  CHECK(vectors_equal(a.bracket(x, y), -a.bracket(y, x)));
  CHECK(vectors_equal(a.ad(x) * y, a.bracket(x, y)));
}

TEST_CASE("ad matrices match the bracket") {
  LieAlgebra a = sl2();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      CHECK(vectors_equal(a.ad_basis(i) * Vector::Unit(3, j),
                          a.bracket_basis(i, j)));
  // ad is a representation: ad_{[x,y]} = [ad_x, ad_y]
  Vector x = vec({1, 1, 0});
  Vector y = vec({0, 2, 3});
  Matrix lhs = a.ad(a.bracket(x, y));
  Matrix rhs = a.ad(x) * a.ad(y) - a.ad(y) * a.ad(x);
  CHECK(matrices_equal(lhs, rhs));
}

TEST_CASE("killing form of sl2") {
  Matrix k = sl2().killing_form();
  Matrix expected(3, 3);
  expected << Rational(8), Rational(0), Rational(0),
      Rational(0), Rational(0), Rational(4),
      Rational(0), Rational(4), Rational(0);
  CHECK(matrices_equal(k, expected));
  CHECK(determinant(k) == Rational(-128));
}

TEST_CASE("killing form is invariant across the catalog") {
  for (const char* name : {"aff1", "heisenberg", "r_rho_r3", "sl2", "oscillator"}) {
    LieAlgebra a = catalog(name).algebra();
    Matrix k = a.killing_form();
    CHECK(is_symmetric(k));
    for (Index i = 0; i < a.dim(); ++i) {
      Matrix ad = a.ad_basis(i);
      // K([x,y],z) + K(y,[x,z]) = 0  <=>  ad^T K + K ad = 0
      CHECK(matrix_is_zero(ad.transpose() * k + k * ad));
    }
  }
}

TEST_CASE("jacobi identity verdicts") {
  CHECK(sl2().check_jacobi().passed());
  CHECK(LieAlgebra::abelian(4).check_jacobi().passed());
  CHECK(catalog("oscillator", {.lambda = {Rational(1), Rational(3)}})
            .algebra()
            .check_jacobi()
            .passed());

  // [e1,e2]=e3, [e1,e3]=e1 violates Jacobi
  SparseTable t = {{{0, 1}, {{2, Rational(1)}}}, {{0, 2}, {{0, Rational(1)}}}};
  LieAlgebra bad("bad", 3, {"e1", "e2", "e3"}, t);
  Report r = bad.check_jacobi();
  CHECK_FALSE(r.passed());
  REQUIRE(r.checks.size() == 1);
  REQUIRE(r.checks[0].witness.has_value());
  const Witness& w = *r.checks[0].witness;
  CHECK(w.indices == std::vector<Index>{0, 1, 2});
  // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = [e3,e3] + 0 - [e1,e2] = -e3
  CHECK(vectors_equal(w.left, vec({0, 0, -1})));
  CHECK(vector_is_zero(w.right));
}

TEST_CASE("same_structure compares brackets not names") {
  LieAlgebra a = sl2();
  LieAlgebra b("other", 3, {"a", "b", "c"}, a.brackets());
  CHECK(a.same_structure(b));
  CHECK_FALSE(a.same_structure(LieAlgebra::abelian(3)));
  CHECK_FALSE(a.same_structure(LieAlgebra::abelian(2)));
}

TEST_CASE("default and deduplicated basis names") {
  CHECK(default_basis(3) == std::vector<std::string>{"e1", "e2", "e3"});
  CHECK(default_basis(2, "f") == std::vector<std::string>{"f1", "f2"});
  CHECK(deduped({"e", "e", "f", "e"}) ==
        std::vector<std::string>{"e", "e'", "f", "e''"});
}

TEST_CASE("sparse combo round trip") {
  Vector v = vec({0, -2, 0, 5});
  SparseCombo c = vector_to_combo(v);
  CHECK(c.size() == 2);
  CHECK(c.at(1) == Rational(-2));
  CHECK(vectors_equal(combo_to_vector(c, 4), v));
}
