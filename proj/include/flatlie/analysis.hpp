#ifndef FLATLIE_ANALYSIS_HPP
#define FLATLIE_ANALYSIS_HPP

#include <variant>

#include "flatlie/constructions.hpp"

namespace flatlie {

/// Orthogonal splitting of a flat Riemannian Lie algebra: an abelian
/// subalgebra b acting by antisymmetric maps on an abelian ideal u.
struct MilnorDecomposition {
  std::vector<Vector> b_basis;
  std::vector<Vector> u_basis;
  Report certified;
};

struct MilnorFailure {
  std::string reason;
  Report report;
};

using MilnorResult = std::variant<MilnorDecomposition, MilnorFailure>;

/// For positive-definite g (PreconditionError otherwise): computes the
/// Levi-Civita product; fails with "metric not flat" when its curvature is
/// nonzero; otherwise returns u = Ker(x -> L_x), b = orthogonal complement
/// of u, and certifies the five decomposition invariants.
MilnorResult milnor_decompose(const LieAlgebra& a, const ScalarProduct& g);

/// Builds b x| u with [b_i, u_j] = action_i(u_j) and all other brackets zero,
/// plus its Levi-Civita pair (always flat). g must be positive definite and
/// block-diagonal w.r.t. the split; the action maps must be antisymmetric on
/// the u block and pairwise commuting.
std::pair<LieAlgebra, MetricPair> milnor_assemble(Index b_dim, Index u_dim,
                                                  const std::vector<Matrix>& action,
                                                  const ScalarProduct& g);

/// Pass iff the Killing form is nondegenerate.
Report is_semisimple(const LieAlgebra& a);

/// For a positive-definite orthogonal algebra and a verified ideal: returns a
/// basis of the orthogonal complement and a report certifying that the
/// complement is again an ideal.
std::pair<std::vector<Vector>, Report>
orthogonal_complement_ideal(const OrthogonalAlgebra& o,
                            const std::vector<Vector>& ideal_basis);

} // namespace flatlie

#endif
