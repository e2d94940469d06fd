#include "flatlie/lie_algebra.hpp"

#include <set>

namespace flatlie {

Vector combo_to_vector(const SparseCombo& combo, Index dim) {
  Vector v = Vector::Zero(dim);
  for (const auto& [k, c] : combo) {
    if (k < 0 || k >= dim)
      throw ValidationError("combination index out of range");
    v(k) = c;
  }
  return v;
}

SparseCombo vector_to_combo(const Vector& v) {
  SparseCombo combo;
  for (Index k = 0; k < v.size(); ++k)
    if (!v(k).is_zero())
      combo[k] = v(k);
  return combo;
}

std::vector<std::string> default_basis(Index n, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (Index i = 1; i <= n; ++i)
    names.push_back(prefix + std::to_string(i));
  return names;
}

std::vector<std::string> deduped(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (std::string& n : names) {
    while (!seen.insert(n).second)
      n += '\'';
  }
  return names;
}

LieAlgebra::LieAlgebra(std::string name, Index dim,
                       std::vector<std::string> basis, SparseTable brackets)
    : name_(std::move(name)), dim_(dim), basis_(std::move(basis)) {
  if (dim_ < 0)
    throw ValidationError("negative dimension");
  if (static_cast<Index>(basis_.size()) != dim_)
    throw DimensionError("basis name count does not match dimension");
  std::set<std::string> seen;
  for (const std::string& b : basis_) {
    if (b.empty())
      throw ValidationError("empty basis name");
    if (!seen.insert(b).second)
      throw ValidationError("duplicate basis name '" + b + "'");
  }
  for (auto& [key, combo] : brackets) {
    const auto [i, j] = key;
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
      throw ValidationError("bracket index out of range");
    if (i >= j)
      throw ValidationError("bracket keys require i < j");
    SparseCombo cleaned;
    for (const auto& [k, c] : combo) {
      if (k < 0 || k >= dim_)
        throw ValidationError("bracket coefficient index out of range");
      if (!c.is_zero())
        cleaned[k] = c;
    }
    if (!cleaned.empty())
      brackets_[key] = std::move(cleaned);
  }
  ad_.resize(static_cast<size_t>(dim_));
  for (Index i = 0; i < dim_; ++i) {
    Matrix m = Matrix::Zero(dim_, dim_);
    for (Index j = 0; j < dim_; ++j) {
      if (i == j)
        continue;
      const bool flip = i > j;
      const auto it = brackets_.find(flip ? std::make_pair(j, i)
                                          : std::make_pair(i, j));
      if (it == brackets_.end())
        continue;
      for (const auto& [k, c] : it->second)
        m(k, j) = flip ? -c : c;
    }
    ad_[static_cast<size_t>(i)] = std::move(m);
  }
}

LieAlgebra LieAlgebra::abelian(Index dim, std::string name) {
  return LieAlgebra(std::move(name), dim, default_basis(dim), {});
}

Vector LieAlgebra::bracket_basis(Index i, Index j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw DimensionError("basis index out of range");
  return ad_[static_cast<size_t>(i)].col(j);
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionError("bracket arguments do not match algebra dimension");
  Vector out = Vector::Zero(dim_);
  for (Index i = 0; i < dim_; ++i)
    if (!x(i).is_zero())
      out += x(i) * (ad_[static_cast<size_t>(i)] * y);
  return out;
}

const Matrix& LieAlgebra::ad_basis(Index i) const {
  if (i < 0 || i >= dim_)
    throw DimensionError("basis index out of range");
  return ad_[static_cast<size_t>(i)];
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != dim_)
    throw DimensionError("vector does not match algebra dimension");
  Matrix m = Matrix::Zero(dim_, dim_);
  for (Index i = 0; i < dim_; ++i)
    if (!x(i).is_zero())
      m += x(i) * ad_[static_cast<size_t>(i)];
  return m;
}

Matrix LieAlgebra::killing_form() const {
  Matrix k(dim_, dim_);
  for (Index i = 0; i < dim_; ++i)
    for (Index j = 0; j < dim_; ++j)
      k(i, j) = (ad_[static_cast<size_t>(i)] * ad_[static_cast<size_t>(j)]).trace();
  return k;
}

Report LieAlgebra::check_jacobi() const {
  Report report;
  for (Index i = 0; i < dim_; ++i)
    for (Index j = i + 1; j < dim_; ++j)
      for (Index k = j + 1; k < dim_; ++k) {
        Vector sum = bracket(bracket_basis(i, j), Vector(Vector::Unit(dim_, k))) +
                     bracket(bracket_basis(j, k), Vector(Vector::Unit(dim_, i))) +
                     bracket(bracket_basis(k, i), Vector(Vector::Unit(dim_, j)));
        if (!vector_is_zero(sum)) {
          report.add_fail("jacobi",
                          Witness{{i, j, k}, sum, Vector(Vector::Zero(dim_))});
          return report;
        }
      }
  report.add_pass("jacobi");
  return report;
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const {
  return dim_ == other.dim_ && brackets_ == other.brackets_;
}

} // namespace flatlie
