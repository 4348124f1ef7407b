#pragma once

#include <optional>

#include "variform/kvector.hpp"

namespace variform {

/// Point of the Grassmann fibration G^k Y: the ray {lambda * xi : lambda > 0}
/// of a nonzero k-vector, written in the chart attached to a pivot
/// multi-index nu. The representative is normalized so that |w[nu]| = 1;
/// pivot_sign records on which side of {xi^nu = 0} the ray lies, so that both
/// half-charts of every pivot are covered with increasing indices.
struct GrassmannPoint {
  Vec base;
  MultiIndex pivot;
  int pivot_sign;  // +1 or -1
  Vec w;           // ranked like KVector::comps(), w[rank(pivot)] == pivot_sign

  int degree() const noexcept { return pivot.degree(); }
  int dim() const noexcept { return pivot.dim(); }

  /// A k-vector in the ray (the normalized representative itself).
  KVector representative() const;
};

/// Whether xi1 = lambda * xi2 for some lambda > 0, up to a relative tolerance.
/// Throws zero_vector if either argument vanishes.
bool equivalent(const KVector& xi1, const KVector& xi2, double tol = 1e-12);

/// Normalizes xi in the chart of `pivot`, or of the largest-magnitude component
/// (ties broken by lowest rank) when no pivot is given.
GrassmannPoint to_grassmann(const KVector& xi, std::optional<MultiIndex> pivot = std::nullopt);

/// Same ray, re-expressed in the chart of `new_pivot`. Throws not_in_chart when
/// |w[new_pivot]| <= 1e-12 * max|w|.
GrassmannPoint grassmann_transition(const GrassmannPoint& p, const MultiIndex& new_pivot);

/// The projection kappa^k of Lambda^k TY onto G^k Y (automatic pivot).
GrassmannPoint project_kappa(const KVector& xi);

/// kappa^k applied to the canonical lift of f at t. Throws immersion_failure
/// when the Jacobian of f has rank < k at t.
GrassmannPoint grassmann_canonical_lift(const DifferentiableMap& f, const Vec& t);

/// Largest absolute difference between two points of G^k Y, compared in the
/// chart of `a`. Returns +inf if b's ray is not in that chart or the base
/// points disagree in dimension.
double grassmann_distance(const GrassmannPoint& a, const GrassmannPoint& b);

}  // namespace variform
