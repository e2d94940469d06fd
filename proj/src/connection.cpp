#include "flatlie/connection.hpp"

namespace flatlie {

Product::Product(LieAlgebra algebra, std::vector<Matrix> left)
    : algebra_(std::move(algebra)), left_(std::move(left)) {
  const Index n = algebra_.dim();
  if (static_cast<Index>(left_.size()) != n)
    throw DimensionError("product needs one left-multiplication per basis vector");
  for (const Matrix& m : left_)
    if (m.rows() != n || m.cols() != n)
      throw DimensionError("left-multiplication matrix has wrong shape");
}

Product Product::zero(LieAlgebra algebra) {
  const Index n = algebra.dim();
  std::vector<Matrix> left(static_cast<size_t>(n), Matrix(Matrix::Zero(n, n)));
  return Product(std::move(algebra), std::move(left));
}

Product Product::from_table(LieAlgebra algebra, const SparseTable& table) {
  const Index n = algebra.dim();
  std::vector<Matrix> left(static_cast<size_t>(n), Matrix(Matrix::Zero(n, n)));
  for (const auto& [key, combo] : table) {
    const auto [i, j] = key;
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw ValidationError("product index out of range");
    for (const auto& [k, c] : combo) {
      if (k < 0 || k >= n)
        throw ValidationError("product coefficient index out of range");
      left[static_cast<size_t>(i)](k, j) = c;
    }
  }
  return Product(std::move(algebra), std::move(left));
}

Vector Product::basis_product(Index i, Index j) const {
  return left_basis(i).col(j);
}

Vector Product::apply(const Vector& x, const Vector& y) const {
  const Index n = dim();
  if (x.size() != n || y.size() != n)
    throw DimensionError("product arguments do not match algebra dimension");
  Vector out = Vector::Zero(n);
  for (Index i = 0; i < n; ++i)
    if (!x(i).is_zero())
      out += x(i) * (left_[static_cast<size_t>(i)] * y);
  return out;
}

const Matrix& Product::left_basis(Index i) const {
  if (i < 0 || i >= dim())
    throw DimensionError("basis index out of range");
  return left_[static_cast<size_t>(i)];
}

Matrix Product::left(const Vector& x) const {
  const Index n = dim();
  if (x.size() != n)
    throw DimensionError("vector does not match algebra dimension");
  Matrix m = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    if (!x(i).is_zero())
      m += x(i) * left_[static_cast<size_t>(i)];
  return m;
}

Matrix Product::right_basis(Index j) const {
  const Index n = dim();
  if (j < 0 || j >= n)
    throw DimensionError("basis index out of range");
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i)
    m.col(i) = left_[static_cast<size_t>(i)].col(j);
  return m;
}

Matrix Product::right(const Vector& x) const {
  const Index n = dim();
  if (x.size() != n)
    throw DimensionError("vector does not match algebra dimension");
  Matrix m = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j)
    if (!x(j).is_zero())
      m += x(j) * right_basis(j);
  return m;
}

SparseTable Product::table() const {
  SparseTable t;
  const Index n = dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      SparseCombo combo = vector_to_combo(basis_product(i, j));
      if (!combo.empty())
        t[{i, j}] = std::move(combo);
    }
  return t;
}

bool Tensor3::is_zero() const {
  for (const Vector& v : data_)
    if (!vector_is_zero(v))
      return false;
  return true;
}

bool Tensor4::is_zero() const {
  for (const Matrix& m : data_)
    if (!matrix_is_zero(m))
      return false;
  return true;
}

Tensor3 torsion(const Product& p) {
  const Index n = p.dim();
  Tensor3 t(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      t.at(i, j) =
          p.basis_product(i, j) - p.basis_product(j, i) - p.algebra().bracket_basis(i, j);
  return t;
}

Matrix curvature_pair(const Product& p, Index i, Index j) {
  const Matrix& li = p.left_basis(i);
  const Matrix& lj = p.left_basis(j);
  return li * lj - lj * li - p.left(p.algebra().bracket_basis(i, j));
}

Vector curvature_component(const Product& p, Index i, Index j, Index k) {
  const Vector ek = Vector::Unit(p.dim(), k);
  return p.apply(Vector(Vector::Unit(p.dim(), i)), p.basis_product(j, k)) -
         p.apply(Vector(Vector::Unit(p.dim(), j)), p.basis_product(i, k)) -
         p.apply(p.algebra().bracket_basis(i, j), ek);
}

Tensor4 curvature(const Product& p) {
  const Index n = p.dim();
  Tensor4 r(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      r.at(i, j) = curvature_pair(p, i, j);
  return r;
}

Report is_flat_affine(const Product& p) {
  Report report;
  const Index n = p.dim();
  bool torsion_ok = true;
  for (Index i = 0; i < n && torsion_ok; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Vector lhs = p.basis_product(i, j) - p.basis_product(j, i);
      Vector rhs = p.algebra().bracket_basis(i, j);
      if (!vectors_equal(lhs, rhs)) {
        report.add_fail("torsion", Witness{{i, j}, lhs, rhs});
        torsion_ok = false;
        break;
      }
    }
  if (torsion_ok)
    report.add_pass("torsion");

  bool curv_ok = true;
  for (Index i = 0; i < n && curv_ok; ++i)
    for (Index j = i + 1; j < n && curv_ok; ++j) {
      Matrix r = curvature_pair(p, i, j);
      for (Index k = 0; k < n; ++k) {
        if (!vector_is_zero(r.col(k))) {
          report.add_fail("curvature",
                          Witness{{i, j, k}, r.col(k), Vector(Vector::Zero(n))});
          curv_ok = false;
          break;
        }
      }
    }
  if (curv_ok)
    report.add_pass("curvature");
  return report;
}

Report is_unimodular(const LieAlgebra& a) {
  Report report;
  for (Index i = 0; i < a.dim(); ++i) {
    Rational tr = a.ad_basis(i).trace();
    if (!tr.is_zero()) {
      Vector left(1), right(1);
      left(0) = tr;
      right(0) = Rational(0);
      report.add_fail("unimodular", Witness{{i}, left, right},
                      "tr(ad) nonzero on basis vector " + std::to_string(i));
      return report;
    }
  }
  report.add_pass("unimodular");
  return report;
}

Report is_complete(const Product& p) {
  Report report;
  if (!is_flat_affine(p).passed())
    report.add_warn("flat_affine_hypothesis", "criterion outside stated hypothesis: product is not flat affine");
  for (Index i = 0; i < p.dim(); ++i) {
    Rational tr = p.right_basis(i).trace();
    if (!tr.is_zero()) {
      Vector left(1), right(1);
      left(0) = tr;
      right(0) = Rational(0);
      report.add_fail("complete", Witness{{i}, left, right},
                      "tr(R) nonzero on basis vector " + std::to_string(i));
      return report;
    }
  }
  report.add_pass("complete");
  return report;
}

Report check_left_homomorphism(const Product& p) {
  Report report;
  const Index n = p.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const Matrix& li = p.left_basis(i);
      const Matrix& lj = p.left_basis(j);
      Matrix lhs = p.left(p.algebra().bracket_basis(i, j));
      Matrix rhs = li * lj - lj * li;
      if (!matrices_equal(lhs, rhs)) {
        for (Index k = 0; k < n; ++k)
          if (!vectors_equal(lhs.col(k), rhs.col(k))) {
            report.add_fail("left_homomorphism",
                            Witness{{i, j, k}, lhs.col(k), rhs.col(k)});
            return report;
          }
      }
    }
  report.add_pass("left_homomorphism");
  return report;
}

} // namespace flatlie
