#pragma once

#include <functional>
#include <span>
#include <vector>

#include "variform/types.hpp"

namespace variform {

struct QuadratureSpec {
  int gauss_order = 8;      // points per axis per cell
  int cells_per_axis = 16;  // uniform subdivision of the box
  bool adaptive = false;
  double target = 1e-9;     // adaptive: accepted |fine - coarse| summed over the box
  int max_depth = 12;       // adaptive: bisection levels per initial cell

  void validate() const;
};

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int order);

/// Pairwise (cascade) summation; the result depends only on the order of
/// `values`, never on scheduling.
double pairwise_sum(std::span<const double> values);

using Integrand = std::function<double(const Vec&)>;

/// Tensor-product Gauss-Legendre over the uniformly subdivided box, or
/// adaptive bisection when spec.adaptive is set. A zero-dimensional box is a
/// point and integrates to f(point).
double integrate_box(const Box& box, const QuadratureSpec& spec, const Integrand& f);

/// Calls visit(t, weight) for every quadrature node of the uniform grid.
void for_each_node(const Box& box, const QuadratureSpec& spec,
                   const std::function<void(const Vec&, double)>& visit);

}  // namespace variform
