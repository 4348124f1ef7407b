#pragma once

#include <Eigen/Dense>

namespace variform {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Closed axis-aligned box [lo_1, hi_1] x ... x [lo_k, hi_k]. A zero-dimensional
/// box is a single point.
struct Box {
  Vec lo;
  Vec hi;

  Box() = default;
  Box(Vec lower, Vec upper);

  static Box interval(double a, double b);
  static Box unit(int dim);

  int dim() const noexcept { return static_cast<int>(lo.size()); }
  double volume() const;
  Vec center() const { return 0.5 * (lo + hi); }
  bool contains(const Vec& t, double tol = 0.0) const;
};

}  // namespace variform
