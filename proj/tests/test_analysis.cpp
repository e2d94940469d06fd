#include "doctest.h"

#include <random>

#include "flatlie/analysis.hpp"

using namespace flatlie;

namespace {

Vector vec(std::initializer_list<int> entries) {
  Vector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (int e : entries)
    v(i++) = Rational(e);
  return v;
}

Matrix rot2(int speed) {
  Matrix j = Matrix::Zero(2, 2);
  j(0, 1) = Rational(-speed);
  j(1, 0) = Rational(speed);
  return j;
}

// b = span{e1}, u = span{e2, e3}, [e1, .] rotates the u-plane
LieAlgebra rot3() {
  SparseTable t = {{{0, 1}, {{2, Rational(1)}}}, {{0, 2}, {{1, Rational(-1)}}}};
  return LieAlgebra("rot3", 3, {"e1", "e2", "e3"}, t);
}

} // namespace

TEST_CASE("milnor decomposition of the rotation algebra") {
  MilnorResult res =
      milnor_decompose(rot3(), ScalarProduct(Matrix::Identity(3, 3)));
  REQUIRE(std::holds_alternative<MilnorDecomposition>(res));
  const auto& d = std::get<MilnorDecomposition>(res);
  CHECK(spans_equal(d.b_basis, {vec({1, 0, 0})}));
  CHECK(spans_equal(d.u_basis, {vec({0, 1, 0}), vec({0, 0, 1})}));
  CHECK(d.certified.passed());
  std::vector<std::string> names;
  for (const Check& c : d.certified.checks)
    names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"orthogonal_splitting", "ideal",
                                          "abelian_ideal", "abelian_subalgebra",
                                          "skew_action"});
}

TEST_CASE("milnor decomposition of an abelian algebra puts everything in u") {
  MilnorResult res = milnor_decompose(LieAlgebra::abelian(3),
                                      ScalarProduct(Matrix::Identity(3, 3)));
  REQUIRE(std::holds_alternative<MilnorDecomposition>(res));
  const auto& d = std::get<MilnorDecomposition>(res);
  CHECK(d.b_basis.empty());
  CHECK(d.u_basis.size() == 3);
}

TEST_CASE("milnor decomposition fails on curved metrics with a report") {
  Manifest m = catalog("aff1");
  MilnorResult res = milnor_decompose(m.algebra(), m.form("euclidean"));
  REQUIRE(std::holds_alternative<MilnorFailure>(res));
  const auto& f = std::get<MilnorFailure>(res);
  CHECK(f.reason == "metric not flat");
  CHECK_FALSE(f.report.passed());

  // so(3) is compact semisimple: no flat left-invariant Riemannian metric
  SparseTable so3t = {{{0, 1}, {{2, Rational(1)}}},
                      {{0, 2}, {{1, Rational(-1)}}},
                      {{1, 2}, {{0, Rational(1)}}}};
  LieAlgebra so3("so3", 3, {"x", "y", "z"}, so3t);
  MilnorResult r2 =
      milnor_decompose(so3, ScalarProduct(Matrix::Identity(3, 3)));
  CHECK(std::holds_alternative<MilnorFailure>(r2));
}

TEST_CASE("milnor decomposition requires positive definiteness") {
  Manifest m = catalog("heisenberg");
  CHECK_THROWS_AS(milnor_decompose(m.algebra(), m.form("lorentz")),
                  PreconditionError);
}

TEST_CASE("milnor decomposition respects a scaled form") {
  // block form diag(4, 9, 9): still flat, same splitting
  Matrix g = Matrix::Zero(3, 3);
  g(0, 0) = Rational(4);
  g(1, 1) = g(2, 2) = Rational(9);
  MilnorResult res = milnor_decompose(rot3(), ScalarProduct(g));
  REQUIRE(std::holds_alternative<MilnorDecomposition>(res));
  const auto& d = std::get<MilnorDecomposition>(res);
  CHECK(spans_equal(d.b_basis, {vec({1, 0, 0})}));
  CHECK(spans_equal(d.u_basis, {vec({0, 1, 0}), vec({0, 0, 1})}));
}

TEST_CASE("milnor assemble builds a flat pair and round-trips") {
  std::vector<Matrix> action = {rot2(1)};
  auto [alg, pair] =
      milnor_assemble(1, 2, action, ScalarProduct(Matrix::Identity(3, 3)));
  CHECK(alg.dim() == 3);
  CHECK(alg.basis() == std::vector<std::string>{"b1", "u1", "u2"});
  CHECK(alg.same_structure(rot3()));
  CHECK(is_flat_metric(pair).passed());

  MilnorResult res = milnor_decompose(alg, pair.form());
  REQUIRE(std::holds_alternative<MilnorDecomposition>(res));
  const auto& d = std::get<MilnorDecomposition>(res);
  CHECK(spans_equal(d.b_basis, {vec({1, 0, 0})}));
  CHECK(spans_equal(d.u_basis, {vec({0, 1, 0}), vec({0, 0, 1})}));
}

TEST_CASE("milnor assemble with two independent rotations in dimension 6") {
  // b = R^2 acting on u = R^4 by two commuting rotation blocks
  Matrix a1 = Matrix::Zero(4, 4), a2 = Matrix::Zero(4, 4);
  a1.topLeftCorner(2, 2) = rot2(1);
  a2.bottomRightCorner(2, 2) = rot2(2);
  auto [alg, pair] =
      milnor_assemble(2, 4, {a1, a2}, ScalarProduct(Matrix::Identity(6, 6)));
  CHECK(alg.check_jacobi().passed());
  CHECK(is_flat_metric(pair).passed());
  CHECK(is_complete(pair.product()).passed());
  CHECK(is_unimodular(alg).passed());

  MilnorResult res = milnor_decompose(alg, pair.form());
  REQUIRE(std::holds_alternative<MilnorDecomposition>(res));
  const auto& d = std::get<MilnorDecomposition>(res);
  // the actions are linearly independent, so b is recovered exactly
  std::vector<Vector> b_expected = {Vector(Vector::Unit(6, 0)),
                                    Vector(Vector::Unit(6, 1))};
  std::vector<Vector> u_expected = {
      Vector(Vector::Unit(6, 2)), Vector(Vector::Unit(6, 3)),
      Vector(Vector::Unit(6, 4)), Vector(Vector::Unit(6, 5))};
  CHECK(spans_equal(d.b_basis, b_expected));
  CHECK(spans_equal(d.u_basis, u_expected));
}

TEST_CASE("milnor assemble with a dependent action absorbs part of b into u") {
  // zero action: the whole algebra is abelian, so u is everything
  auto [alg, pair] = milnor_assemble(1, 2, {Matrix::Zero(2, 2)},
                                     ScalarProduct(Matrix::Identity(3, 3)));
  CHECK(alg.brackets().empty());
  MilnorResult res = milnor_decompose(alg, pair.form());
  REQUIRE(std::holds_alternative<MilnorDecomposition>(res));
  CHECK(std::get<MilnorDecomposition>(res).u_basis.size() == 3);
}

TEST_CASE("milnor assemble validates its input") {
  ScalarProduct id3{Matrix(Matrix::Identity(3, 3))};
  // wrong action count
  CHECK_THROWS_AS(milnor_assemble(2, 1, {rot2(1)}, id3), DimensionError);
  // wrong action shape
  CHECK_THROWS_AS(milnor_assemble(1, 2, {Matrix::Zero(3, 3)}, id3),
                  DimensionError);
  // form not positive definite
  Matrix lor = Matrix::Identity(3, 3);
  lor(0, 0) = Rational(-1);
  CHECK_THROWS_AS(milnor_assemble(1, 2, {rot2(1)}, ScalarProduct(lor)),
                  PreconditionError);
  // form not block-diagonal w.r.t. the split
  Matrix mixed = Matrix::Identity(3, 3);
  mixed(0, 1) = mixed(1, 0) = Rational(1, 2);
  CHECK_THROWS_AS(milnor_assemble(1, 2, {rot2(1)}, ScalarProduct(mixed)),
                  ValidationError);
  // action not antisymmetric on the u block
  Matrix sym = Matrix::Zero(2, 2);
  sym(0, 0) = Rational(1);
  CHECK_THROWS_AS(milnor_assemble(1, 2, {sym}, id3), ValidationError);
  // actions must commute pairwise
  Matrix b1 = Matrix::Zero(3, 3), b2 = Matrix::Zero(3, 3);
  b1.topLeftCorner(2, 2) = rot2(1);
  b2.topLeftCorner(2, 2) = rot2(2); // same plane, different speed: commutes
  Matrix g5 = Matrix::Identity(5, 5);
  CHECK_NOTHROW(milnor_assemble(2, 3, {b1, b2}, ScalarProduct{g5}));
  Matrix c2 = Matrix::Zero(3, 3);
  c2.bottomRightCorner(2, 2) = rot2(1);
  // b1 and c2 rotate planes overlapping in coordinate 1: they do not commute
  CHECK_THROWS_AS(milnor_assemble(2, 3, {b1, c2}, ScalarProduct{g5}),
                  ValidationError);
}

TEST_CASE("semisimplicity via the killing form") {
  CHECK(is_semisimple(catalog("sl2").algebra()).passed());
  Report r = is_semisimple(catalog("heisenberg").algebra());
  CHECK_FALSE(r.passed());
  CHECK(r.checks[0].note == "killing form is degenerate");
  CHECK_FALSE(is_semisimple(LieAlgebra::abelian(2)).passed());
  CHECK_FALSE(is_semisimple(catalog("aff1").algebra()).passed());
  CHECK_FALSE(is_semisimple(catalog("oscillator").algebra()).passed());

  SparseTable so3t = {{{0, 1}, {{2, Rational(1)}}},
                      {{0, 2}, {{1, Rational(-1)}}},
                      {{1, 2}, {{0, Rational(1)}}}};
  CHECK(is_semisimple(LieAlgebra("so3", 3, {"x", "y", "z"}, so3t)).passed());
}

TEST_CASE("orthogonal complement of an ideal is an ideal") {
  // so(3) with minus-half the killing form (= identity gram scaled)
  SparseTable so3t = {{{0, 1}, {{2, Rational(1)}}},
                      {{0, 2}, {{1, Rational(-1)}}},
                      {{1, 2}, {{0, Rational(1)}}}};
  LieAlgebra so3("so3", 3, {"x", "y", "z"}, so3t);
  Matrix k = so3.killing_form();
  CHECK(matrices_equal(k, Matrix(Rational(-2) * Matrix::Identity(3, 3))));
  OrthogonalAlgebra o(so3, ScalarProduct(Matrix::Identity(3, 3)));
  // the only ideals are 0 and so(3); check the trivial ones round-trip
  auto [comp, rep] = orthogonal_complement_ideal(o, {});
  CHECK(comp.size() == 3);
  CHECK(rep.passed());
  auto [comp2, rep2] = orthogonal_complement_ideal(
      o, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  CHECK(comp2.empty());
  CHECK(rep2.passed());

  // abelian direct sum: span{e1} is an ideal with complement span{e2,e3}
  OrthogonalAlgebra ab(LieAlgebra::abelian(3),
                       ScalarProduct(Matrix::Identity(3, 3)));
  auto [comp3, rep3] = orthogonal_complement_ideal(ab, {vec({1, 0, 0})});
  CHECK(spans_equal(comp3, {vec({0, 1, 0}), vec({0, 0, 1})}));
  CHECK(rep3.passed());

  // non-ideal subspace is rejected
  CHECK_THROWS_AS(orthogonal_complement_ideal(o, {vec({1, 0, 0})}),
                  ValidationError);
  // indefinite forms are out of scope for this helper
  Manifest osc = catalog("oscillator");
  OrthogonalAlgebra oo(osc.algebra(), osc.form("mu0"));
  CHECK_THROWS_AS(orthogonal_complement_ideal(oo, {}), PreconditionError);
}

TEST_CASE("random assembled pairs always decompose cleanly") {
  std::mt19937 rng(6301);
  std::uniform_int_distribution<int> speed(1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a1 = Matrix::Zero(4, 4);
    a1.topLeftCorner(2, 2) = rot2(speed(rng));
    a1.bottomRightCorner(2, 2) = rot2(speed(rng));
    auto [alg, pair] =
        milnor_assemble(1, 4, {a1}, ScalarProduct(Matrix::Identity(5, 5)));
    CHECK(is_flat_metric(pair).passed());
    MilnorResult res = milnor_decompose(alg, pair.form());
    REQUIRE(std::holds_alternative<MilnorDecomposition>(res));
    const auto& d = std::get<MilnorDecomposition>(res);
    CHECK(d.certified.passed());
    CHECK(d.b_basis.size() + d.u_basis.size() == 5);
  }
}
