#include "flatlie/metric.hpp"

namespace flatlie {

namespace {

LuFactorization factor_gram(const Matrix& gram) {
  if (!is_symmetric(gram))
    throw ShapeError("gram matrix must be symmetric");
  try {
    return LuFactorization(gram);
  } catch (const SingularError&) {
    throw SingularError("degenerate gram matrix");
  }
}

} // namespace

ScalarProduct::ScalarProduct(Matrix gram)
    : gram_(std::move(gram)), sig_(), lu_(factor_gram(gram_)) {
  sig_ = flatlie::signature(gram_);
}

Rational ScalarProduct::eval(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw DimensionError("vectors do not match form dimension");
  return (x.transpose() * gram_ * y)(0, 0);
}

MetricPair::MetricPair(Product product, ScalarProduct form)
    : product_(std::move(product)), form_(std::move(form)) {
  const Index n = product_.dim();
  if (form_.dim() != n)
    throw DimensionError("form and product live on different dimensions");
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Vector lhs = product_.basis_product(i, j) - product_.basis_product(j, i);
      if (!vectors_equal(lhs, product_.algebra().bracket_basis(i, j)))
        throw ValidationError("product has torsion; not a metric pair");
    }
  const Matrix& g = form_.gram();
  for (Index i = 0; i < n; ++i) {
    const Matrix& li = product_.left_basis(i);
    if (!matrix_is_zero(Matrix(li.transpose() * g + g * li)))
      throw ValidationError("product is not compatible with the form");
  }
}

MetricPair levi_civita(const LieAlgebra& a, const ScalarProduct& g) {
  const Index n = a.dim();
  if (g.dim() != n)
    throw DimensionError("form does not match algebra dimension");
  // gb(i, j) = gram * [e_i, e_j], cached for the three Koszul terms.
  std::vector<Vector> gb(static_cast<size_t>(n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      gb[static_cast<size_t>(i * n + j)] = g.gram() * a.bracket_basis(i, j);
  const Rational half(1, 2);
  std::vector<Matrix> left(static_cast<size_t>(n), Matrix(Matrix::Zero(n, n)));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vector rhs(n);
      for (Index k = 0; k < n; ++k)
        rhs(k) = half * (gb[static_cast<size_t>(i * n + j)](k) -
                         gb[static_cast<size_t>(j * n + k)](i) +
                         gb[static_cast<size_t>(k * n + i)](j));
      left[static_cast<size_t>(i)].col(j) = g.factorization().solve(rhs);
    }
  return MetricPair(Product(a, std::move(left)), g);
}

Report is_flat_metric(const MetricPair& mp) {
  Report report;
  const Product& p = mp.product();
  const Index n = p.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Matrix r = curvature_pair(p, i, j);
      for (Index k = 0; k < n; ++k)
        if (!vector_is_zero(r.col(k))) {
          report.add_fail("flat_metric",
                          Witness{{i, j, k}, r.col(k), Vector(Vector::Zero(n))});
          return report;
        }
    }
  report.add_pass("flat_metric");
  return report;
}

Report is_invariant(const LieAlgebra& a, const ScalarProduct& g) {
  Report report;
  const Index n = a.dim();
  if (g.dim() != n)
    throw DimensionError("form does not match algebra dimension");
  for (Index i = 0; i < n; ++i) {
    Matrix defect = a.ad_basis(i).transpose() * g.gram() + g.gram() * a.ad_basis(i);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (!defect(j, k).is_zero()) {
          Vector left(1), right(1);
          left(0) = g.eval(a.bracket_basis(i, j), Vector(Vector::Unit(n, k)));
          right(0) = -g.eval(Vector(Vector::Unit(n, j)), a.bracket_basis(i, k));
          report.add_fail("invariant", Witness{{i, j, k}, left, right});
          return report;
        }
  }
  report.add_pass("invariant");
  return report;
}

Product biinvariant_levi_civita(const LieAlgebra& a) {
  const Index n = a.dim();
  const Rational half(1, 2);
  std::vector<Matrix> left(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i)
    left[static_cast<size_t>(i)] = half * a.ad_basis(i);
  return Product(a, std::move(left));
}

Report is_two_nilpotent(const LieAlgebra& a) {
  Report report;
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Matrix adb = a.ad(a.bracket_basis(i, j));
      for (Index k = 0; k < n; ++k)
        if (!vector_is_zero(adb.col(k))) {
          report.add_fail("two_nilpotent",
                          Witness{{i, j, k}, adb.col(k), Vector(Vector::Zero(n))});
          return report;
        }
    }
  report.add_pass("two_nilpotent");
  return report;
}

Report antisymmetric_wrt(const ScalarProduct& g, const Matrix& m) {
  if (m.rows() != g.dim() || m.cols() != g.dim())
    throw DimensionError("map does not match form dimension");
  Report report;
  Matrix defect = g.gram() * m + m.transpose() * g.gram();
  for (Index i = 0; i < defect.rows(); ++i)
    for (Index j = 0; j < defect.cols(); ++j)
      if (!defect(i, j).is_zero()) {
        Vector left(1), right(1);
        left(0) = defect(i, j);
        right(0) = Rational(0);
        report.add_fail("antisymmetric", Witness{{i, j}, left, right});
        return report;
      }
  report.add_pass("antisymmetric");
  return report;
}

} // namespace flatlie
