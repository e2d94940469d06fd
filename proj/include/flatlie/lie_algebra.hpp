#ifndef FLATLIE_LIE_ALGEBRA_HPP
#define FLATLIE_LIE_ALGEBRA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flatlie/linalg.hpp"
#include "flatlie/report.hpp"

namespace flatlie {

/// Sparse linear combination of basis vectors: index -> coefficient.
using SparseCombo = std::map<Index, Rational>;

/// Sparse bilinear table: (i, j) -> combination. Used both for Lie brackets
/// (keys restricted to i < j) and for general products (any i, j).
using SparseTable = std::map<std::pair<Index, Index>, SparseCombo>;

Vector combo_to_vector(const SparseCombo& combo, Index dim);
SparseCombo vector_to_combo(const Vector& v);

/// Basis names e1..en (or another prefix).
std::vector<std::string> default_basis(Index n, const std::string& prefix = "e");

/// Makes names pairwise distinct by appending apostrophes where needed.
std::vector<std::string> deduped(std::vector<std::string> names);

/// A finite-dimensional Lie algebra given by structure constants over the
/// rationals. Antisymmetry is structural: only pairs i < j are stored and
/// [e_j, e_i] is reconstructed with a sign. The Jacobi identity is *not*
/// assumed; check_jacobi verifies it.
class LieAlgebra {
public:
  LieAlgebra(std::string name, Index dim, std::vector<std::string> basis,
             SparseTable brackets);

  static LieAlgebra abelian(Index dim, std::string name = "abelian");

  const std::string& name() const { return name_; }
  Index dim() const { return dim_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const SparseTable& brackets() const { return brackets_; }

  /// [e_i, e_j] for any pair, including i >= j.
  Vector bracket_basis(Index i, Index j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Matrix of ad_{e_i} : y -> [e_i, y].
  const Matrix& ad_basis(Index i) const;
  Matrix ad(const Vector& x) const;

  /// K_ij = tr(ad_{e_i} ad_{e_j}).
  Matrix killing_form() const;

  /// Verifies the Jacobi identity on all basis triples i < j < k; on failure
  /// the report carries the first failing triple in lexicographic order.
  Report check_jacobi() const;

  bool same_structure(const LieAlgebra& other) const;

private:
  std::string name_;
  Index dim_;
  std::vector<std::string> basis_;
  SparseTable brackets_;
  std::vector<Matrix> ad_; // cached ad_{e_i}
};

} // namespace flatlie

#endif
