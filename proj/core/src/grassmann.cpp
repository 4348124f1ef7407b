#include "variform/grassmann.hpp"

#include <cmath>
#include <limits>

#include "variform/error.hpp"

namespace variform {

namespace {

constexpr double kPivotTol = 1e-12;

Eigen::Index largest_component(const Vec& comps) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < comps.size(); ++i) {
    // strict comparison keeps the lowest rank on ties
    if (std::abs(comps[i]) > std::abs(comps[best])) best = i;
  }
  return best;
}

}  // namespace

KVector GrassmannPoint::representative() const { return KVector(base, degree(), w); }

bool equivalent(const KVector& xi1, const KVector& xi2, double tol) {
  if (xi1.degree() != xi2.degree() || xi1.dim() != xi2.dim()) {
    fail(Errc::dimension_mismatch, "comparing k-vectors of different shape");
  }
  const double n1 = xi1.max_abs();
  const double n2 = xi2.max_abs();
  if (n1 == 0.0 || n2 == 0.0) fail(Errc::zero_vector, "equivalence of a zero k-vector");
  const double base_scale = std::max(1.0, xi1.base().cwiseAbs().maxCoeff());
  if ((xi1.base() - xi2.base()).cwiseAbs().maxCoeff() > tol * base_scale) return false;

  const Eigen::Index r = largest_component(xi2.comps());
  const double lambda = xi1.comps()[r] / xi2.comps()[r];
  if (!(lambda > 0.0)) return false;
  return (xi1.comps() - lambda * xi2.comps()).cwiseAbs().maxCoeff() <= tol * n1;
}

GrassmannPoint to_grassmann(const KVector& xi, std::optional<MultiIndex> pivot) {
  const double scale = xi.max_abs();
  if (scale == 0.0) fail(Errc::zero_vector, "the zero k-vector has no Grassmann class");
  Eigen::Index r;
  if (pivot) {
    if (pivot->degree() != xi.degree() || pivot->dim() != xi.dim()) {
      fail(Errc::dimension_mismatch, "pivot does not match the k-vector's shape");
    }
    r = static_cast<Eigen::Index>(rank(*pivot));
    if (xi.comps()[r] == 0.0) {
      fail(Errc::pivot_degenerate, "component " + pivot->to_string() + " is zero");
    }
  } else {
    r = largest_component(xi.comps());
  }
  const double p = xi.comps()[r];
  Vec w = xi.comps() / std::abs(p);
  const int sign = p > 0.0 ? 1 : -1;
  w[r] = sign;
  return GrassmannPoint{xi.base(), unrank(static_cast<std::size_t>(r), xi.degree(), xi.dim()),
                        sign, std::move(w)};
}

GrassmannPoint grassmann_transition(const GrassmannPoint& p, const MultiIndex& new_pivot) {
  if (new_pivot.degree() != p.degree() || new_pivot.dim() != p.dim()) {
    fail(Errc::dimension_mismatch, "pivot does not match the point's shape");
  }
  if (new_pivot == p.pivot) return p;
  const auto r = static_cast<Eigen::Index>(rank(new_pivot));
  const double q = p.w[r];
  if (std::abs(q) <= kPivotTol * p.w.cwiseAbs().maxCoeff()) {
    fail(Errc::not_in_chart, "ray is outside the chart of " + new_pivot.to_string());
  }
  Vec w = p.w / std::abs(q);
  const int sign = q > 0.0 ? 1 : -1;
  w[r] = sign;
  return GrassmannPoint{p.base, new_pivot, sign, std::move(w)};
}

GrassmannPoint project_kappa(const KVector& xi) { return to_grassmann(xi); }

GrassmannPoint grassmann_canonical_lift(const DifferentiableMap& f, const Vec& t) {
  const Mat J = f.jacobian(t);
  const KVector lift = wedge(f(t), J);
  if (degenerate_lift(J, lift)) {
    fail(Errc::immersion_failure, "map '" + f.name() + "' is not an immersion at the given point");
  }
  return project_kappa(lift);
}

double grassmann_distance(const GrassmannPoint& a, const GrassmannPoint& b) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (a.degree() != b.degree() || a.dim() != b.dim()) return inf;
  GrassmannPoint bb = b;
  try {
    bb = grassmann_transition(b, a.pivot);
  } catch (const Error&) {
    return inf;
  }
  if (bb.pivot_sign != a.pivot_sign) return inf;
  return std::max((a.base - bb.base).cwiseAbs().maxCoeff(), (a.w - bb.w).cwiseAbs().maxCoeff());
}

}  // namespace variform
