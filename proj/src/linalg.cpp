#include "flatlie/linalg.hpp"

#include <numeric>

namespace flatlie {

bool is_symmetric(const Matrix& a) {
  if (a.rows() != a.cols())
    return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i))
        return false;
  return true;
}

bool vector_is_zero(const Vector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero())
      return false;
  return true;
}

bool matrix_is_zero(const Matrix& a) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero())
        return false;
  return true;
}

bool vectors_equal(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i))
      return false;
  return true;
}

bool matrices_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j))
        return false;
  return true;
}

LuFactorization::LuFactorization(Matrix a) : lu_(std::move(a)) {
  if (lu_.rows() != lu_.cols())
    throw ShapeError("LU factorization requires a square matrix");
  const Index n = lu_.rows();
  perm_.resize(static_cast<size_t>(n));
  std::iota(perm_.begin(), perm_.end(), Index(0));
  for (Index k = 0; k < n; ++k) {
    Index pivot = -1;
    for (Index r = k; r < n; ++r)
      if (!lu_(r, k).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      throw SingularError("singular matrix in LU factorization");
    if (pivot != k) {
      lu_.row(pivot).swap(lu_.row(k));
      std::swap(perm_[static_cast<size_t>(pivot)], perm_[static_cast<size_t>(k)]);
    }
    for (Index r = k + 1; r < n; ++r) {
      if (lu_(r, k).is_zero())
        continue;
      Rational factor = lu_(r, k) / lu_(k, k);
      lu_(r, k) = factor;
      for (Index c = k + 1; c < n; ++c)
        lu_(r, c) -= factor * lu_(k, c);
    }
  }
}

Vector LuFactorization::solve(const Vector& b) const {
  const Index n = dim();
  if (b.size() != n)
    throw DimensionError("right-hand side size does not match LU dimension");
  Vector y(n);
  for (Index i = 0; i < n; ++i) {
    Rational acc = b(perm_[static_cast<size_t>(i)]);
    for (Index j = 0; j < i; ++j)
      acc -= lu_(i, j) * y(j);
    y(i) = acc;
  }
  for (Index i = n - 1; i >= 0; --i) {
    Rational acc = y(i);
    for (Index j = i + 1; j < n; ++j)
      acc -= lu_(i, j) * y(j);
    y(i) = acc / lu_(i, i);
  }
  return y;
}

Matrix LuFactorization::solve(const Matrix& b) const {
  if (b.rows() != dim())
    throw DimensionError("right-hand side rows do not match LU dimension");
  Matrix x(b.rows(), b.cols());
  for (Index c = 0; c < b.cols(); ++c)
    x.col(c) = solve(Vector(b.col(c)));
  return x;
}

Rational determinant(Matrix a) {
  if (a.rows() != a.cols())
    throw ShapeError("determinant requires a square matrix");
  const Index n = a.rows();
  Rational det(1);
  for (Index k = 0; k < n; ++k) {
    Index pivot = -1;
    for (Index r = k; r < n; ++r)
      if (!a(r, k).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      return Rational(0);
    if (pivot != k) {
      a.row(pivot).swap(a.row(k));
      det = -det;
    }
    det *= a(k, k);
    for (Index r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero())
        continue;
      Rational factor = a(r, k) / a(k, k);
      for (Index c = k; c < n; ++c)
        a(r, c) -= factor * a(k, c);
    }
  }
  return det;
}

Matrix inverse(const Matrix& a) {
  LuFactorization lu(a);
  return lu.solve(Matrix(Matrix::Identity(a.rows(), a.cols())));
}

Vector solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size())
    throw DimensionError("system matrix and right-hand side sizes differ");
  return LuFactorization(a).solve(b);
}

RowEchelon row_echelon(Matrix a) {
  RowEchelon out;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index lead = 0;
  for (Index col = 0; col < cols && lead < rows; ++col) {
    Index pivot = -1;
    for (Index r = lead; r < rows; ++r)
      if (!a(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      continue;
    if (pivot != lead)
      a.row(pivot).swap(a.row(lead));
    Rational inv = Rational(1) / a(lead, col);
    for (Index c = col; c < cols; ++c)
      a(lead, c) *= inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == lead || a(r, col).is_zero())
        continue;
      Rational factor = a(r, col);
      for (Index c = col; c < cols; ++c)
        a(r, c) -= factor * a(lead, c);
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.mat = std::move(a);
  return out;
}

Index rank(const Matrix& a) { return row_echelon(a).rank(); }

std::vector<Vector> nullspace(const Matrix& a) {
  RowEchelon re = row_echelon(a);
  const Index cols = a.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Index p : re.pivot_cols)
    is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Vector> basis;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<size_t>(free)])
      continue;
    Vector v = Vector::Zero(cols);
    v(free) = Rational(1);
    for (size_t r = 0; r < re.pivot_cols.size(); ++r)
      v(re.pivot_cols[r]) = -re.mat(static_cast<Index>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix row_span_basis(const std::vector<Vector>& vectors) {
  if (vectors.empty())
    return Matrix(0, 0);
  const Index dim = vectors.front().size();
  Matrix rows(static_cast<Index>(vectors.size()), dim);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim)
      throw DimensionError("vectors of mixed dimension in span computation");
    rows.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  RowEchelon re = row_echelon(std::move(rows));
  return Matrix(re.mat.topRows(re.rank()));
}

bool spans_equal(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  return matrices_equal(row_span_basis(a), row_span_basis(b));
}

bool in_span(const Vector& v, const std::vector<Vector>& basis) {
  std::vector<Vector> extended = basis;
  extended.push_back(v);
  return row_span_basis(extended).rows() == row_span_basis(basis).rows();
}

std::pair<Matrix, Matrix> congruence_diagonalize(const Matrix& m) {
  if (!is_symmetric(m))
    throw ShapeError("congruence diagonalization requires a symmetric matrix");
  const Index n = m.rows();
  Matrix a = m;
  Matrix s = Matrix::Identity(n, n);
  for (Index p = 0; p < n; ++p) {
    if (a(p, p).is_zero()) {
      Index d = -1;
      for (Index j = p + 1; j < n; ++j)
        if (!a(j, j).is_zero()) {
          d = j;
          break;
        }
      if (d >= 0) {
        a.row(p).swap(a.row(d));
        a.col(p).swap(a.col(d));
        s.col(p).swap(s.col(d));
      } else {
        Index off = -1;
        for (Index j = p + 1; j < n; ++j)
          if (!a(p, j).is_zero()) {
            off = j;
            break;
          }
        if (off < 0)
          continue; // whole row/column already zero
        // All later diagonal entries vanish, so adding basis vector `off`
        // to basis vector p makes the pivot 2*a(p,off) != 0.
        a.col(p) += a.col(off);
        a.row(p) += a.row(off);
        s.col(p) += s.col(off);
      }
    }
    for (Index j = p + 1; j < n; ++j) {
      if (a(p, j).is_zero())
        continue;
      Rational factor = a(p, j) / a(p, p);
      a.col(j) -= factor * a.col(p);
      a.row(j) -= factor * a.row(p);
      s.col(j) -= factor * s.col(p);
    }
  }
  Matrix d = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    d(i, i) = a(i, i);
  return {std::move(d), std::move(s)};
}

Signature signature(const Matrix& m) {
  auto [d, s] = congruence_diagonalize(m);
  Signature sig;
  for (Index i = 0; i < d.rows(); ++i) {
    const int sign = d(i, i).sign();
    if (sign < 0)
      ++sig.index;
    else if (sign > 0)
      ++sig.plus;
    else
      ++sig.zero;
  }
  return sig;
}

} // namespace flatlie
