#include "flatlie/constructions.hpp"

namespace flatlie {

namespace {

std::vector<std::string> dual_names(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const std::string& n : names)
    out.push_back(n + "*");
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a,
                                const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void require_consistent(const OrthogonalAlgebra& base, const LieAlgebra& h,
                        const SkewDerivationMap& psi) {
  if (!psi.source().same_structure(h))
    throw ValidationError("psi source does not match the auxiliary algebra");
  if (!psi.target().algebra().same_structure(base.algebra()) ||
      !matrices_equal(psi.target().form().gram(), base.form().gram()))
    throw ValidationError("psi target does not match the base orthogonal algebra");
}

// Phi(e_i, e_j)(z_c) as the (i, j) entry of psi_c^T gram.
std::vector<Matrix> cocycle_tables(const OrthogonalAlgebra& base,
                                   const SkewDerivationMap& psi) {
  std::vector<Matrix> w;
  w.reserve(psi.maps().size());
  for (const Matrix& m : psi.maps())
    w.push_back(m.transpose() * base.form().gram());
  return w;
}

} // namespace

Matrix hyperbolic_gram(Index n) {
  Matrix g = Matrix::Zero(2 * n, 2 * n);
  for (Index i = 0; i < n; ++i) {
    g(i, n + i) = Rational(1);
    g(n + i, i) = Rational(1);
  }
  return g;
}

OrthogonalAlgebra::OrthogonalAlgebra(LieAlgebra algebra, ScalarProduct form)
    : algebra_(std::move(algebra)), form_(std::move(form)) {
  if (form_.dim() != algebra_.dim())
    throw DimensionError("form does not match algebra dimension");
  if (!is_invariant(algebra_, form_).passed())
    throw ValidationError("form is not invariant; not an orthogonal Lie algebra");
}

SkewDerivationMap::SkewDerivationMap(LieAlgebra source, OrthogonalAlgebra target,
                                     std::vector<Matrix> maps)
    : source_(std::move(source)), target_(std::move(target)),
      maps_(std::move(maps)) {
  const Index m = target_.algebra().dim();
  if (static_cast<Index>(maps_.size()) != source_.dim())
    throw DimensionError("psi needs one map per source basis vector");
  for (const Matrix& psi : maps_)
    if (psi.rows() != m || psi.cols() != m)
      throw DimensionError("psi map has wrong shape");
  const LieAlgebra& g = target_.algebra();
  for (size_t a = 0; a < maps_.size(); ++a) {
    const Matrix& psi = maps_[a];
    for (Index i = 0; i < m; ++i)
      for (Index j = i + 1; j < m; ++j) {
        Vector lhs = psi * g.bracket_basis(i, j);
        Vector rhs = g.bracket(Vector(psi.col(i)), Vector(Vector::Unit(m, j))) +
                     g.bracket(Vector(Vector::Unit(m, i)), Vector(psi.col(j)));
        if (!vectors_equal(lhs, rhs))
          throw ValidationError("psi[" + std::to_string(a) +
                                "] is not a derivation: fails on basis pair (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
      }
    if (!antisymmetric_wrt(target_.form(), psi).passed())
      throw ValidationError("psi[" + std::to_string(a) +
                            "] is not antisymmetric with respect to the form");
  }
  for (Index a = 0; a < source_.dim(); ++a)
    for (Index b = a + 1; b < source_.dim(); ++b) {
      Matrix lhs = map(source_.bracket_basis(a, b));
      Matrix rhs = maps_[static_cast<size_t>(a)] * maps_[static_cast<size_t>(b)] -
                   maps_[static_cast<size_t>(b)] * maps_[static_cast<size_t>(a)];
      if (!matrices_equal(lhs, rhs))
        throw ValidationError(
            "psi is not a Lie algebra homomorphism: fails on basis pair (" +
            std::to_string(a) + "," + std::to_string(b) + ")");
    }
}

Matrix SkewDerivationMap::map(const Vector& z) const {
  if (z.size() != source_.dim())
    throw DimensionError("vector does not match psi source dimension");
  const Index m = target_.algebra().dim();
  Matrix out = Matrix::Zero(m, m);
  for (Index a = 0; a < source_.dim(); ++a)
    if (!z(a).is_zero())
      out += z(a) * maps_[static_cast<size_t>(a)];
  return out;
}

OrthogonalAlgebra cotangent_coadjoint(const LieAlgebra& a) {
  if (!a.check_jacobi().passed())
    throw PreconditionError("input algebra fails the Jacobi identity");
  const Index n = a.dim();
  SparseTable brackets = a.brackets();
  for (Index i = 0; i < n; ++i) {
    const Matrix& ad = a.ad_basis(i);
    for (Index m = 0; m < n; ++m) {
      SparseCombo combo;
      for (Index k = 0; k < n; ++k)
        if (!ad(m, k).is_zero())
          combo[n + k] = -ad(m, k);
      if (!combo.empty())
        brackets[{i, n + m}] = std::move(combo);
    }
  }
  LieAlgebra ext("T*" + a.name(), 2 * n,
                 deduped(concat(a.basis(), dual_names(a.basis()))),
                 std::move(brackets));
  return OrthogonalAlgebra(std::move(ext), ScalarProduct(hyperbolic_gram(n)));
}

MetricPair classical_cotangent(const LieAlgebra& a, const Product& p) {
  if (!p.algebra().same_structure(a))
    throw ValidationError("product does not live on the given algebra");
  if (!is_flat_affine(p).passed())
    throw PreconditionError("product is not flat affine");
  const Index n = a.dim();
  SparseTable brackets = a.brackets();
  for (Index i = 0; i < n; ++i) {
    const Matrix& li = p.left_basis(i);
    for (Index m = 0; m < n; ++m) {
      SparseCombo combo;
      for (Index k = 0; k < n; ++k)
        if (!li(m, k).is_zero())
          combo[n + k] = -li(m, k);
      if (!combo.empty())
        brackets[{i, n + m}] = std::move(combo);
    }
  }
  LieAlgebra ext("T*" + a.name(), 2 * n,
                 deduped(concat(a.basis(), dual_names(a.basis()))),
                 std::move(brackets));
  std::vector<Matrix> left(static_cast<size_t>(2 * n),
                           Matrix(Matrix::Zero(2 * n, 2 * n)));
  for (Index i = 0; i < n; ++i) {
    const Matrix& li = p.left_basis(i);
    Matrix& lam = left[static_cast<size_t>(i)];
    lam.topLeftCorner(n, n) = li;
    lam.bottomRightCorner(n, n) = -li.transpose();
  }
  return MetricPair(Product(std::move(ext), std::move(left)),
                    ScalarProduct(hyperbolic_gram(n)));
}

LieAlgebra central_extension(const OrthogonalAlgebra& base, const LieAlgebra& h,
                             const SkewDerivationMap& psi) {
  require_consistent(base, h, psi);
  const Index m = base.algebra().dim();
  const Index l = h.dim();
  const std::vector<Matrix> w = cocycle_tables(base, psi);
  SparseTable brackets;
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j) {
      SparseCombo combo = vector_to_combo(base.algebra().bracket_basis(i, j));
      for (Index c = 0; c < l; ++c) {
        const Rational phi = w[static_cast<size_t>(c)](i, j);
        if (!phi.is_zero())
          combo[m + c] = phi;
      }
      if (!combo.empty())
        brackets[{i, j}] = std::move(combo);
    }
  return LieAlgebra("cext(" + base.algebra().name() + "," + h.name() + ")",
                    m + l,
                    deduped(concat(base.algebra().basis(), dual_names(h.basis()))),
                    std::move(brackets));
}

OrthogonalAlgebra double_extension(const OrthogonalAlgebra& base,
                                   const LieAlgebra& h,
                                   const SkewDerivationMap& psi) {
  require_consistent(base, h, psi);
  const Index m = base.algebra().dim();
  const Index l = h.dim();
  const Index dim = l + m + l;
  const std::vector<Matrix> w = cocycle_tables(base, psi);
  SparseTable brackets;
  // [z_a, z_b] = [z_a, z_b]_h
  for (const auto& [key, combo] : h.brackets())
    brackets[key] = combo;
  for (Index a = 0; a < l; ++a) {
    // [z_a, x_i] = psi_a(e_i)
    const Matrix& psi_a = psi.maps()[static_cast<size_t>(a)];
    for (Index i = 0; i < m; ++i) {
      SparseCombo combo;
      for (Index k = 0; k < m; ++k)
        if (!psi_a(k, i).is_zero())
          combo[l + k] = psi_a(k, i);
      if (!combo.empty())
        brackets[{a, l + i}] = std::move(combo);
    }
    // [z_a, alpha_c] = pi*_{z_a}(f_c) = -t(ad_h z_a) f_c
    const Matrix& ad_a = h.ad_basis(a);
    for (Index c = 0; c < l; ++c) {
      SparseCombo combo;
      for (Index d = 0; d < l; ++d)
        if (!ad_a(c, d).is_zero())
          combo[l + m + d] = -ad_a(c, d);
      if (!combo.empty())
        brackets[{a, l + m + c}] = std::move(combo);
    }
  }
  // [x_i, x_j] = [e_i, e_j]_g + Phi(e_i, e_j)
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j) {
      SparseCombo combo;
      for (const auto& [k, c] : vector_to_combo(base.algebra().bracket_basis(i, j)))
        combo[l + k] = c;
      for (Index c = 0; c < l; ++c) {
        const Rational phi = w[static_cast<size_t>(c)](i, j);
        if (!phi.is_zero())
          combo[l + m + c] = phi;
      }
      if (!combo.empty())
        brackets[{l + i, l + j}] = std::move(combo);
    }
  Matrix gram = Matrix::Zero(dim, dim);
  gram.block(l, l, m, m) = base.form().gram();
  for (Index a = 0; a < l; ++a) {
    gram(a, l + m + a) = Rational(1);
    gram(l + m + a, a) = Rational(1);
  }
  LieAlgebra ext("dext(" + base.algebra().name() + "," + h.name() + ")", dim,
                 deduped(concat(concat(h.basis(), base.algebra().basis()),
                                dual_names(h.basis()))),
                 std::move(brackets));
  return OrthogonalAlgebra(std::move(ext), ScalarProduct(std::move(gram)));
}

OrthogonalAlgebra oscillator(const std::vector<Rational>& lambda) {
  if (lambda.empty())
    throw ValidationError("oscillator needs at least one frequency");
  for (size_t j = 0; j < lambda.size(); ++j) {
    if (lambda[j].sign() <= 0)
      throw ValidationError("oscillator frequencies must be positive");
    if (j > 0 && lambda[j] < lambda[j - 1])
      throw ValidationError("oscillator frequencies must be nondecreasing");
  }
  const Index n = static_cast<Index>(lambda.size());
  const Index dim = 2 * n + 2;
  std::string name = "oscillator(";
  for (size_t j = 0; j < lambda.size(); ++j) {
    if (j)
      name += ',';
    name += lambda[j].str();
  }
  name += ')';
  std::vector<std::string> basis;
  basis.push_back("e");
  for (Index j = 1; j <= n; ++j)
    basis.push_back("e" + std::to_string(j));
  for (Index j = 1; j <= n; ++j)
    basis.push_back("ehat" + std::to_string(j));
  basis.push_back("ehat");
  SparseTable brackets;
  for (Index j = 1; j <= n; ++j) {
    const Rational& lj = lambda[static_cast<size_t>(j - 1)];
    brackets[{0, j}] = {{n + j, lj}};
    brackets[{0, n + j}] = {{j, -lj}};
    brackets[{j, n + j}] = {{2 * n + 1, Rational(1)}};
  }
  Matrix gram = Matrix::Zero(dim, dim);
  gram(0, 2 * n + 1) = Rational(1);
  gram(2 * n + 1, 0) = Rational(1);
  for (Index j = 1; j <= n; ++j) {
    const Rational inv = Rational(1) / lambda[static_cast<size_t>(j - 1)];
    gram(j, j) = inv;
    gram(n + j, n + j) = inv;
  }
  LieAlgebra alg(std::move(name), dim, deduped(std::move(basis)),
                 std::move(brackets));
  return OrthogonalAlgebra(std::move(alg), ScalarProduct(std::move(gram)));
}

Report check_intertwiner(const LieAlgebra& a, const Product& p, const Matrix& psi) {
  if (!p.algebra().same_structure(a))
    throw ValidationError("product does not live on the given algebra");
  const Index n = a.dim();
  if (psi.rows() != n || psi.cols() != n)
    throw DimensionError("psi does not match algebra dimension");
  Report report;
  if (determinant(psi).is_zero())
    report.add_fail("invertible", std::nullopt, "psi is singular");
  else
    report.add_pass("invertible");
  for (Index i = 0; i < n; ++i) {
    Matrix lhs = Matrix(-a.ad_basis(i).transpose()) * psi;
    Matrix rhs = psi * Matrix(-p.left_basis(i).transpose());
    if (!matrices_equal(lhs, rhs)) {
      for (Index k = 0; k < n; ++k)
        if (!vectors_equal(lhs.col(k), rhs.col(k))) {
          report.add_fail("intertwines", Witness{{i, k}, lhs.col(k), rhs.col(k)});
          return report;
        }
    }
  }
  report.add_pass("intertwines");
  return report;
}

namespace {

Manifest catalog_aff1() {
  Manifest m;
  m.name = "aff1";
  m.dim = 2;
  m.basis = {"e1", "e2"};
  m.brackets[{0, 1}] = {{1, Rational(1)}};
  Matrix hyp = Matrix::Zero(2, 2);
  hyp(0, 1) = hyp(1, 0) = Rational(1);
  m.forms["hyperbolic"] = hyp;
  m.forms["euclidean"] = Matrix::Identity(2, 2);
  for (const auto& [pname, alpha] :
       std::vector<std::pair<std::string, Rational>>{
           {"alpha0", Rational(0)}, {"alpha1", Rational(1)}, {"alpha-2", Rational(-2)}}) {
    SparseTable t;
    if (!alpha.is_zero())
      t[{0, 0}] = {{0, alpha}};
    t[{0, 1}] = {{1, Rational(1)}};
    m.products[pname] = std::move(t);
  }
  return m;
}

Manifest catalog_heisenberg(Index n) {
  if (n < 1)
    throw ValidationError("heisenberg needs n >= 1");
  Manifest m;
  m.dim = 2 * n + 1;
  m.name = "h" + std::to_string(m.dim);
  m.basis = default_basis(m.dim);
  for (Index i = 0; i < n; ++i)
    m.brackets[{i, n + i}] = {{2 * n, Rational(1)}};
  m.forms["euclidean"] = Matrix::Identity(m.dim, m.dim);
  if (n == 1) {
    // the flat Lorentzian form whose Levi-Civita product is "flat" below
    Matrix lorentz = Matrix::Zero(3, 3);
    lorentz(0, 0) = Rational(1);
    lorentz(1, 2) = lorentz(2, 1) = Rational(1);
    m.forms["lorentz"] = lorentz;
    SparseTable flat;
    flat[{1, 0}] = {{2, Rational(-1)}};
    flat[{1, 1}] = {{0, Rational(1)}};
    m.products["flat"] = std::move(flat);
  }
  return m;
}

Manifest catalog_r_rho_r3() {
  Manifest m;
  m.name = "r_rho_r3";
  m.dim = 4;
  m.basis = {"e1", "e2", "e3", "e4"};
  m.brackets[{0, 1}] = {{1, Rational(1)}};
  m.brackets[{0, 2}] = {{2, Rational(-1)}};
  m.forms["euclidean"] = Matrix::Identity(4, 4);
  for (const auto& [pname, alpha] : std::vector<std::pair<std::string, Rational>>{
           {"alpha0", Rational(0)}, {"alpha1", Rational(1)}}) {
    SparseTable t;
    if (!alpha.is_zero())
      t[{0, 0}] = {{0, alpha}};
    t[{0, 1}] = {{1, Rational(1)}};
    t[{0, 2}] = {{2, Rational(-1)}};
    m.products[pname] = std::move(t);
  }
  return m;
}

Manifest catalog_sl2() {
  Manifest m;
  m.name = "sl2";
  m.dim = 3;
  m.basis = {"h", "e", "f"};
  m.brackets[{0, 1}] = {{1, Rational(2)}};
  m.brackets[{0, 2}] = {{2, Rational(-2)}};
  m.brackets[{1, 2}] = {{0, Rational(1)}};
  Matrix killing = Matrix::Zero(3, 3);
  killing(0, 0) = Rational(8);
  killing(1, 2) = killing(2, 1) = Rational(4);
  m.forms["killing"] = killing;
  SparseTable ad_table, half_table;
  const LieAlgebra alg = m.algebra();
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      Vector b = alg.bracket_basis(i, j);
      SparseCombo full = vector_to_combo(b);
      SparseCombo half = vector_to_combo(Vector(Rational(1, 2) * b));
      if (!full.empty())
        ad_table[{i, j}] = std::move(full);
      if (!half.empty())
        half_table[{i, j}] = std::move(half);
    }
  m.products["ad"] = std::move(ad_table);
  m.products["half_ad"] = std::move(half_table);
  return m;
}

Manifest catalog_abelian(Index n) {
  if (n < 0)
    throw ValidationError("abelian needs n >= 0");
  Manifest m;
  m.name = "abelian" + std::to_string(n);
  m.dim = n;
  m.basis = default_basis(n);
  m.forms["euclidean"] = Matrix::Identity(n, n);
  return m;
}

Manifest catalog_oscillator(const std::vector<Rational>& lambda) {
  OrthogonalAlgebra osc = oscillator(lambda);
  Manifest m = Manifest::from_algebra(osc.algebra());
  m.forms["mu0"] = osc.form().gram();
  return m;
}

} // namespace

Manifest catalog(const std::string& name, const CatalogOptions& opts) {
  if (name == "aff1")
    return catalog_aff1();
  if (name == "heisenberg")
    return catalog_heisenberg(opts.n);
  if (name == "r_rho_r3")
    return catalog_r_rho_r3();
  if (name == "sl2")
    return catalog_sl2();
  if (name == "abelian")
    return catalog_abelian(opts.n);
  if (name == "oscillator")
    return catalog_oscillator(opts.lambda);
  throw ValidationError("unknown catalog name '" + name + "'");
}

} // namespace flatlie
