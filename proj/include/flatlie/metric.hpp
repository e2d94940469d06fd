#ifndef FLATLIE_METRIC_HPP
#define FLATLIE_METRIC_HPP

#include "flatlie/connection.hpp"

namespace flatlie {

/// Symmetric nondegenerate bilinear form given by its Gram matrix. The
/// constructor rejects non-symmetric (ShapeError) and degenerate
/// (SingularError) input; the factorization is computed once and reused for
/// every Koszul solve.
class ScalarProduct {
public:
  explicit ScalarProduct(Matrix gram);

  Index dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Rational eval(const Vector& x, const Vector& y) const;
  const Signature& signature() const { return sig_; }
  const LuFactorization& factorization() const { return lu_; }
  bool positive_definite() const {
    return sig_.index == 0 && sig_.zero == 0;
  }

private:
  Matrix gram_;
  Signature sig_;
  LuFactorization lu_;
};

/// A torsion-free, metric-compatible product together with its form. The
/// constructor re-verifies both defining identities even for internally
/// produced pairs.
class MetricPair {
public:
  MetricPair(Product product, ScalarProduct form);

  const Product& product() const { return product_; }
  const ScalarProduct& form() const { return form_; }

private:
  Product product_;
  ScalarProduct form_;
};

/// Unique Levi-Civita product of (A, g) via the Koszul formula: for each
/// basis pair (i, j), the coefficients of e_i.e_j solve
///   gram . c = rhs,  rhs_k = 1/2 (g([e_i,e_j],e_k) - g([e_j,e_k],e_i)
///                                  + g([e_k,e_i],e_j)).
MetricPair levi_civita(const LieAlgebra& a, const ScalarProduct& g);

/// Pass iff the curvature of the pair's product vanishes identically.
Report is_flat_metric(const MetricPair& mp);

/// Pass iff g([x,y],z) + g(y,[x,z]) = 0 on all basis triples; a passing form
/// makes (A, g) an orthogonal Lie algebra.
Report is_invariant(const LieAlgebra& a, const ScalarProduct& g);

/// The product x.y = 1/2 [x, y] (Levi-Civita of any invariant form).
Product biinvariant_levi_civita(const LieAlgebra& a);

/// Pass iff [[e_i,e_j],e_k] = 0 for all triples.
Report is_two_nilpotent(const LieAlgebra& a);

/// Pass iff gram.m + m^T.gram = 0.
Report antisymmetric_wrt(const ScalarProduct& g, const Matrix& m);

} // namespace flatlie

#endif
