#ifndef FLATLIE_LINALG_HPP
#define FLATLIE_LINALG_HPP

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "flatlie/errors.hpp"
#include "flatlie/rational.hpp"

namespace flatlie {

using Index = Eigen::Index;
using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

bool is_symmetric(const Matrix& a);

bool vector_is_zero(const Vector& v);
bool matrix_is_zero(const Matrix& a);
bool vectors_equal(const Vector& a, const Vector& b);
bool matrices_equal(const Matrix& a, const Matrix& b);

/// Exact LU factorization with row pivoting (first nonzero pivot in column
/// order, so results are reproducible). Construction throws SingularError
/// when the matrix is not invertible.
class LuFactorization {
public:
  explicit LuFactorization(Matrix a);

  Index dim() const { return lu_.rows(); }
  Vector solve(const Vector& b) const;
  Matrix solve(const Matrix& b) const;

private:
  Matrix lu_;               // L strictly below the diagonal (unit implied), U on and above
  std::vector<Index> perm_; // row permutation applied before elimination
};

/// Determinant by fraction-free-but-exact Gaussian elimination; 0 for
/// singular input, 1 for the empty matrix.
Rational determinant(Matrix a);

Matrix inverse(const Matrix& a);

/// Solves the square system a x = b exactly. Throws SingularError when a is
/// not invertible and DimensionError on mismatched sizes.
Vector solve(const Matrix& a, const Vector& b);

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  Matrix mat;
  std::vector<Index> pivot_cols;
  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

RowEchelon row_echelon(Matrix a);

Index rank(const Matrix& a);

/// Canonical basis of the kernel of a, one vector per free column of the
/// reduced row echelon form, ordered by free column index.
std::vector<Vector> nullspace(const Matrix& a);

/// Canonical basis of the span of the given vectors: the nonzero rows of the
/// reduced row echelon form, returned as matrix rows. Two families span the
/// same subspace iff their canonical bases are equal.
Matrix row_span_basis(const std::vector<Vector>& vectors);

bool spans_equal(const std::vector<Vector>& a, const std::vector<Vector>& b);

bool in_span(const Vector& v, const std::vector<Vector>& basis);

/// Congruence diagonalization of a symmetric matrix: returns (d, s) with s
/// invertible and s^T m s = d diagonal. Throws ShapeError when m is not
/// symmetric.
std::pair<Matrix, Matrix> congruence_diagonalize(const Matrix& m);

/// Inertia of a symmetric bilinear form: `index` counts negative squares,
/// `plus` positive squares, `zero` the radical dimension.
struct Signature {
  Index index = 0;
  Index plus = 0;
  Index zero = 0;
  bool operator==(const Signature&) const = default;
};

Signature signature(const Matrix& m);

} // namespace flatlie

#endif
