#include "flatlie/analysis.hpp"

namespace flatlie {

namespace {

bool subspace_bracket_into(const LieAlgebra& a, const std::vector<Vector>& from,
                           const std::vector<Vector>& target) {
  for (Index i = 0; i < a.dim(); ++i)
    for (const Vector& v : from)
      if (!in_span(a.bracket(Vector(Vector::Unit(a.dim(), i)), v), target))
        return false;
  return true;
}

} // namespace

MilnorResult milnor_decompose(const LieAlgebra& a, const ScalarProduct& g) {
  if (!g.positive_definite())
    throw PreconditionError("milnor decomposition requires a positive-definite form");
  const Index n = a.dim();
  MetricPair pair = levi_civita(a, g);
  Report flat = is_flat_metric(pair);
  if (!flat.passed())
    return MilnorFailure{"metric not flat", std::move(flat)};

  // u = Ker(x -> L_x): kernel of the n^2 x n matrix whose column i stacks
  // the columns of L_{e_i}.
  Matrix stacked(n * n, n);
  for (Index i = 0; i < n; ++i) {
    const Matrix& li = pair.product().left_basis(i);
    for (Index c = 0; c < n; ++c)
      for (Index r = 0; r < n; ++r)
        stacked(c * n + r, i) = li(r, c);
  }
  std::vector<Vector> u = nullspace(stacked);

  // b = orthogonal complement of u.
  Matrix ortho(static_cast<Index>(u.size()), n);
  for (size_t r = 0; r < u.size(); ++r)
    ortho.row(static_cast<Index>(r)) = (g.gram() * u[r]).transpose();
  std::vector<Vector> b = nullspace(ortho);

  MilnorDecomposition out;
  out.b_basis = std::move(b);
  out.u_basis = std::move(u);
  Report& cert = out.certified;

  std::vector<Vector> all = out.b_basis;
  all.insert(all.end(), out.u_basis.begin(), out.u_basis.end());
  bool splitting = row_span_basis(all).rows() == n;
  for (const Vector& bv : out.b_basis)
    for (const Vector& uv : out.u_basis)
      if (!g.eval(bv, uv).is_zero())
        splitting = false;
  if (splitting)
    cert.add_pass("orthogonal_splitting");
  else
    cert.add_fail("orthogonal_splitting");

  if (subspace_bracket_into(a, out.u_basis, out.u_basis))
    cert.add_pass("ideal");
  else
    cert.add_fail("ideal");

  bool abelian_u = true;
  for (const Vector& x : out.u_basis)
    for (const Vector& y : out.u_basis)
      if (!vector_is_zero(a.bracket(x, y)))
        abelian_u = false;
  if (abelian_u)
    cert.add_pass("abelian_ideal");
  else
    cert.add_fail("abelian_ideal");

  bool abelian_b = true;
  for (const Vector& x : out.b_basis)
    for (const Vector& y : out.b_basis)
      if (!vector_is_zero(a.bracket(x, y)))
        abelian_b = false;
  if (abelian_b)
    cert.add_pass("abelian_subalgebra");
  else
    cert.add_fail("abelian_subalgebra");

  bool skew = true;
  for (const Vector& bv : out.b_basis)
    if (!antisymmetric_wrt(g, a.ad(bv)).passed())
      skew = false;
  if (skew)
    cert.add_pass("skew_action");
  else
    cert.add_fail("skew_action");

  return out;
}

std::pair<LieAlgebra, MetricPair> milnor_assemble(Index b_dim, Index u_dim,
                                                  const std::vector<Matrix>& action,
                                                  const ScalarProduct& g) {
  if (b_dim < 0 || u_dim < 0)
    throw ValidationError("negative block dimension");
  const Index n = b_dim + u_dim;
  if (g.dim() != n)
    throw DimensionError("form does not match b_dim + u_dim");
  if (!g.positive_definite())
    throw PreconditionError("milnor assembly requires a positive-definite form");
  for (Index i = 0; i < b_dim; ++i)
    for (Index j = 0; j < u_dim; ++j)
      if (!g.gram()(i, b_dim + j).is_zero())
        throw ValidationError("form is not block-diagonal with respect to b + u");
  if (static_cast<Index>(action.size()) != b_dim)
    throw DimensionError("need one action map per b basis vector");
  const Matrix gu = g.gram().block(b_dim, b_dim, u_dim, u_dim);
  const ScalarProduct gu_form =
      u_dim > 0 ? ScalarProduct(gu) : ScalarProduct(Matrix(0, 0));
  for (size_t i = 0; i < action.size(); ++i) {
    const Matrix& m = action[i];
    if (m.rows() != u_dim || m.cols() != u_dim)
      throw DimensionError("action map has wrong shape");
    if (!antisymmetric_wrt(gu_form, m).passed())
      throw ValidationError("action map " + std::to_string(i) +
                            " is not antisymmetric on u");
    for (size_t j = i + 1; j < action.size(); ++j)
      if (!matrices_equal(Matrix(m * action[j]), Matrix(action[j] * m)))
        throw ValidationError("action maps " + std::to_string(i) + " and " +
                              std::to_string(j) + " do not commute");
  }
  SparseTable brackets;
  for (Index i = 0; i < b_dim; ++i) {
    const Matrix& m = action[static_cast<size_t>(i)];
    for (Index j = 0; j < u_dim; ++j) {
      SparseCombo combo;
      for (Index k = 0; k < u_dim; ++k)
        if (!m(k, j).is_zero())
          combo[b_dim + k] = m(k, j);
      if (!combo.empty())
        brackets[{i, b_dim + j}] = std::move(combo);
    }
  }
  std::vector<std::string> basis = default_basis(b_dim, "b");
  for (const std::string& s : default_basis(u_dim, "u"))
    basis.push_back(s);
  LieAlgebra alg("milnor(" + std::to_string(b_dim) + "," + std::to_string(u_dim) + ")",
                 n, std::move(basis), std::move(brackets));
  MetricPair pair = levi_civita(alg, g);
  return {std::move(alg), std::move(pair)};
}

Report is_semisimple(const LieAlgebra& a) {
  Report report;
  Rational det = determinant(a.killing_form());
  if (det.is_zero())
    report.add_fail("semisimple", std::nullopt, "killing form is degenerate");
  else
    report.add_pass("semisimple", "killing determinant " + det.str());
  return report;
}

std::pair<std::vector<Vector>, Report>
orthogonal_complement_ideal(const OrthogonalAlgebra& o,
                            const std::vector<Vector>& ideal_basis) {
  const LieAlgebra& a = o.algebra();
  const Index n = a.dim();
  if (!o.form().positive_definite())
    throw PreconditionError("complement computation requires a positive-definite form");
  for (const Vector& v : ideal_basis)
    if (v.size() != n)
      throw DimensionError("ideal vector does not match algebra dimension");
  if (!subspace_bracket_into(a, ideal_basis, ideal_basis))
    throw ValidationError("given subspace is not an ideal");
  Matrix ortho(static_cast<Index>(ideal_basis.size()), n);
  for (size_t r = 0; r < ideal_basis.size(); ++r)
    ortho.row(static_cast<Index>(r)) = (o.form().gram() * ideal_basis[r]).transpose();
  std::vector<Vector> complement = nullspace(ortho);
  Report report;
  if (subspace_bracket_into(a, complement, complement))
    report.add_pass("complement_ideal");
  else
    report.add_fail("complement_ideal");
  return {std::move(complement), std::move(report)};
}

} // namespace flatlie
