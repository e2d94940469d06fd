#ifndef FLATLIE_CONSTRUCTIONS_HPP
#define FLATLIE_CONSTRUCTIONS_HPP

#include "flatlie/manifest.hpp"

namespace flatlie {

/// A Lie algebra with an invariant scalar product: g([x,y],z) + g(y,[x,z])
/// vanishes on all triples. The constructor validates invariance.
class OrthogonalAlgebra {
public:
  OrthogonalAlgebra(LieAlgebra algebra, ScalarProduct form);

  const LieAlgebra& algebra() const { return algebra_; }
  const ScalarProduct& form() const { return form_; }

private:
  LieAlgebra algebra_;
  ScalarProduct form_;
};

/// A homomorphism psi from an auxiliary algebra h into the antisymmetric
/// derivations of an orthogonal algebra (g, mu0): each psi_z is a derivation
/// of g, is antisymmetric w.r.t. mu0, and psi_{[z,z']} = [psi_z, psi_{z'}].
/// All three conditions are validated at construction.
class SkewDerivationMap {
public:
  SkewDerivationMap(LieAlgebra source, OrthogonalAlgebra target,
                    std::vector<Matrix> maps);

  const LieAlgebra& source() const { return source_; }
  const OrthogonalAlgebra& target() const { return target_; }
  const std::vector<Matrix>& maps() const { return maps_; }
  Matrix map(const Vector& z) const;

private:
  LieAlgebra source_;
  OrthogonalAlgebra target_;
  std::vector<Matrix> maps_;
};

/// Cotangent algebra g + g* with the coadjoint action:
/// [(x,a),(y,b)] = ([x,y], ad*_x b - ad*_y a), hyperbolic form a(y) + b(x).
/// Basis order: g-basis first, then the dual basis.
OrthogonalAlgebra cotangent_coadjoint(const LieAlgebra& a);

/// Cotangent algebra of a flat affine structure: bracket via L*_x = -t(L_x),
/// hyperbolic form, and the product (x,a).(y,b) = (x.y, L*_x b), which is the
/// Levi-Civita product of the hyperbolic form and is flat.
MetricPair classical_cotangent(const LieAlgebra& a, const Product& p);

/// The intermediate central extension g x_Phi h* with
/// [(x,a),(y,b)] = ([x,y]_g, Phi(x,y)), Phi(x,y)(z) = mu0(psi_z x, y).
/// Basis order: g-basis, then h-dual basis.
LieAlgebra central_extension(const OrthogonalAlgebra& base, const LieAlgebra& h,
                             const SkewDerivationMap& psi);

/// Double orthogonal extension h + g + h* with the total bracket
/// [(z,x,a),(z',y,b)] = ([z,z']_h, psi_z y - psi_{z'} x + [x,y]_g,
///                       pi*_z b - pi*_{z'} a + Phi(x,y))
/// and form mu0(x,y) + a(z') + b(z). Basis order: h, g, h*.
OrthogonalAlgebra double_extension(const OrthogonalAlgebra& base,
                                   const LieAlgebra& h,
                                   const SkewDerivationMap& psi);

/// Oscillator algebra for 0 < lambda_1 <= ... <= lambda_n, in basis
/// (e, e_1..e_n, ehat_1..ehat_n, ehat):
///   [e, e_j] = lambda_j ehat_j, [e, ehat_j] = -lambda_j e_j,
///   [e_j, ehat_j] = ehat,
/// with invariant form mu0 of signature (1, 2n+1).
OrthogonalAlgebra oscillator(const std::vector<Rational>& lambda);

/// Checks that psi : g* -> g* intertwines the coadjoint and L* actions:
/// psi invertible and ad*_{e_i} psi = psi L*_{e_i} for all i.
Report check_intertwiner(const LieAlgebra& a, const Product& p, const Matrix& psi);

struct CatalogOptions {
  Index n = 1;                            // heisenberg / abelian size
  std::vector<Rational> lambda{Rational(1)}; // oscillator frequencies
};

/// Named example manifests: "aff1", "heisenberg", "r_rho_r3", "abelian",
/// "sl2", "oscillator".
Manifest catalog(const std::string& name, const CatalogOptions& opts = {});

/// Gram matrix [[0, I], [I, 0]] on dimension 2n.
Matrix hyperbolic_gram(Index n);

} // namespace flatlie

#endif
