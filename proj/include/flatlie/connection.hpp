#ifndef FLATLIE_CONNECTION_HPP
#define FLATLIE_CONNECTION_HPP

#include <vector>

#include "flatlie/lie_algebra.hpp"

namespace flatlie {

/// A bilinear product x.y on a Lie algebra, representing a left-invariant
/// linear connection: e_i.e_j = sum_k a^k_ij e_k. No symmetry is assumed.
class Product {
public:
  /// left[i] is the matrix of L_{e_i} : y -> e_i.y, so left[i](k, j) = a^k_ij.
  Product(LieAlgebra algebra, std::vector<Matrix> left);

  static Product zero(LieAlgebra algebra);
  static Product from_table(LieAlgebra algebra, const SparseTable& table);

  const LieAlgebra& algebra() const { return algebra_; }
  Index dim() const { return algebra_.dim(); }

  Vector basis_product(Index i, Index j) const;
  Vector apply(const Vector& x, const Vector& y) const;

  /// Matrix of y -> x.y.
  const Matrix& left_basis(Index i) const;
  Matrix left(const Vector& x) const;

  /// Matrix of y -> y.x.
  Matrix right_basis(Index j) const;
  Matrix right(const Vector& x) const;

  /// Sparse coefficient table (only nonzero combinations), for serialization.
  SparseTable table() const;

private:
  LieAlgebra algebra_;
  std::vector<Matrix> left_;
};

/// Dense rank-3 array of vectors t(i, j) = T(e_i, e_j).
class Tensor3 {
public:
  explicit Tensor3(Index dim)
      : dim_(dim),
        data_(static_cast<size_t>(dim * dim), Vector(Vector::Zero(dim))) {}

  Index dim() const { return dim_; }
  Vector& at(Index i, Index j) { return data_[idx(i, j)]; }
  const Vector& operator()(Index i, Index j) const { return data_[idx(i, j)]; }
  bool is_zero() const;

private:
  size_t idx(Index i, Index j) const {
    return static_cast<size_t>(i * dim_ + j);
  }
  Index dim_;
  std::vector<Vector> data_;
};

/// Dense rank-4 array r(i, j) = matrix whose column k is R(e_i, e_j)e_k.
class Tensor4 {
public:
  explicit Tensor4(Index dim)
      : dim_(dim),
        data_(static_cast<size_t>(dim * dim), Matrix(Matrix::Zero(dim, dim))) {}

  Index dim() const { return dim_; }
  Matrix& at(Index i, Index j) { return data_[idx(i, j)]; }
  const Matrix& operator()(Index i, Index j) const { return data_[idx(i, j)]; }
  Vector operator()(Index i, Index j, Index k) const {
    return data_[idx(i, j)].col(k);
  }
  bool is_zero() const;

private:
  size_t idx(Index i, Index j) const {
    return static_cast<size_t>(i * dim_ + j);
  }
  Index dim_;
  std::vector<Matrix> data_;
};

/// T(e_i, e_j) = e_i.e_j - e_j.e_i - [e_i, e_j].
Tensor3 torsion(const Product& p);

/// Matrix of z -> R(e_i, e_j)z = L_i L_j z - L_j L_i z - L_{[e_i, e_j]} z.
Matrix curvature_pair(const Product& p, Index i, Index j);

/// Single component R(e_i, e_j)e_k, computed without materializing the
/// full tensor.
Vector curvature_component(const Product& p, Index i, Index j, Index k);

/// Fully materialized curvature tensor (fine for the small dimensions this
/// library targets; use curvature_pair/curvature_component to stay lazy).
Tensor4 curvature(const Product& p);

/// Pass iff torsion and curvature both vanish identically.
Report is_flat_affine(const Product& p);

/// Pass iff tr(ad_{e_i}) = 0 for every basis index.
Report is_unimodular(const LieAlgebra& a);

/// Trace criterion for geodesic completeness: tr(R_{e_i}) = 0 for all i.
/// The criterion is stated for flat affine products; when the product is not
/// flat affine a warning check is recorded and the traces are still tested.
Report is_complete(const Product& p);

/// Pass iff L_{[e_i,e_j]} = L_{e_i}L_{e_j} - L_{e_j}L_{e_i} for all i < j.
Report check_left_homomorphism(const Product& p);

} // namespace flatlie

#endif
