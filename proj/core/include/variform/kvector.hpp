#pragma once

#include <span>

#include "variform/map.hpp"
#include "variform/multiindex.hpp"
#include "variform/types.hpp"

namespace variform {

/// Element of the k-th exterior power of the tangent space at `base`, written
/// in chart coordinates. Only strictly increasing multi-indices are stored,
/// comps[rank(I)] being the coefficient of d/dy^{I_1} ^ ... ^ d/dy^{I_k}.
class KVector {
 public:
  KVector(Vec base, int degree, Vec comps);

  static KVector zero(Vec base, int degree);
  /// The basis element d/dy^{I_1} ^ ... ^ d/dy^{I_k}.
  static KVector basis(Vec base, const MultiIndex& index);

  const Vec& base() const noexcept { return base_; }
  const Vec& comps() const noexcept { return comps_; }
  int degree() const noexcept { return degree_; }
  int dim() const noexcept { return static_cast<int>(base_.size()); }

  double operator[](const MultiIndex& index) const;
  /// Antisymmetric reconstruction for an arbitrary (possibly unsorted,
  /// possibly repeating) tuple of 1-based indices.
  double component(std::span<const int> tuple) const;
  double max_abs() const;

  KVector operator*(double s) const;
  KVector operator+(const KVector& other) const;

 private:
  Vec base_;
  int degree_;
  Vec comps_;
};

/// k-th compound matrix: entry (I, J) is the minor of A with rows I and
/// columns J, both ranked as in enumerate().
Mat compound_matrix(const Mat& A, int k);

/// Decomposable k-vector v_1 ^ ... ^ v_k from the columns of `vectors` (m x k).
KVector wedge(const Vec& base, const Mat& vectors);
KVector wedge(const Vec& base, std::span<const Vec> vectors);
/// Exterior product of a p-vector and a q-vector at the same point.
KVector wedge(const KVector& a, const KVector& b);

/// Lambda^k T_x f applied to xi (based at x), returned at f(x). Uses the k-th
/// compound of the Jacobian.
KVector lift_kvector(const DifferentiableMap& f, const Vec& x, const KVector& xi);

/// The canonical k-vector field on R^n at t: d/dt^1 ^ ... ^ d/dt^k.
KVector canonical_field(const Vec& t, int k);

/// Canonical lift of a map from R^k: the wedge of its k Jacobian columns.
KVector canonical_lift(const DifferentiableMap& f, const Vec& t);

/// True when `lift` (the wedge of the columns of `jacobian`) is negligible
/// against the Hadamard bound, i.e. the map is not an immersion there.
bool degenerate_lift(const Mat& jacobian, const KVector& lift);

/// iota_{k,m} and its left inverse pr_{m,k}.
struct CanonicalInclusion {
  int k;
  int m;

  DifferentiableMap inclusion() const;
  DifferentiableMap projection() const;
};

/// Chart on Y adapted to a k-dimensional submanifold S = {y^{k+1} = ... = y^m = 0}.
struct AdaptedChart {
  int k;
  int m;
  double tol_surface = 1e-12;
};

/// Value of the canonical section along S at a point y of S. Throws
/// off_submanifold when a trailing coordinate exceeds tol_surface * max(1, |y|).
KVector canonical_section_along_S(const AdaptedChart& chart, const Vec& y);

/// Norm of xi ^ xi for a bivector; zero exactly when xi is decomposable.
/// Throws unsupported_degree for k != 2.
double plucker_residual(const KVector& xi);

}  // namespace variform
