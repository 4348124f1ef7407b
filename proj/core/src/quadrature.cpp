#include "variform/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "variform/error.hpp"

namespace variform {

void QuadratureSpec::validate() const {
  if (gauss_order < 1) fail(Errc::invalid_argument, "gauss_order must be >= 1");
  if (cells_per_axis < 1) fail(Errc::invalid_argument, "cells_per_axis must be >= 1");
  if (adaptive && !(target > 0.0)) fail(Errc::invalid_argument, "adaptive target must be > 0");
  if (max_depth < 0) fail(Errc::invalid_argument, "max_depth must be >= 0");
}

GaussRule gauss_legendre(int order) {
  if (order < 1) fail(Errc::invalid_argument, "Gauss-Legendre order must be >= 1");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // three-term recurrence for P_n and its derivative
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      const double pn = n == 1 ? x : p1;
      const double pm = n == 1 ? 1.0 : p0;
      dp = n * (x * pn - pm) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    if (n == 1) {
      rule.nodes[0] = 0.0;
      rule.weights[0] = 2.0;
      break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

// Visits the tensor-rule nodes of one cell [lo, hi] with their weights.
template <typename Visit>
void cell_nodes(const Vec& lo, const Vec& hi, const GaussRule& rule, Visit&& visit) {
  const int k = static_cast<int>(lo.size());
  const int q = static_cast<int>(rule.nodes.size());
  const Vec half = 0.5 * (hi - lo);
  const Vec mid = 0.5 * (hi + lo);
  const double jac = half.prod();
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  Vec t(k);
  while (true) {
    double w = jac;
    for (int a = 0; a < k; ++a) {
      t[a] = mid[a] + half[a] * rule.nodes[static_cast<std::size_t>(idx[a])];
      w *= rule.weights[static_cast<std::size_t>(idx[a])];
    }
    visit(t, w);
    int a = 0;
    while (a < k && ++idx[a] == q) idx[a++] = 0;
    if (a == k) break;
  }
}

double cell_rule(const Vec& lo, const Vec& hi, const GaussRule& rule, const Integrand& f) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(std::pow(rule.nodes.size(), lo.size())));
  cell_nodes(lo, hi, rule, [&](const Vec& t, double w) { terms.push_back(w * f(t)); });
  return pairwise_sum(terms);
}

double refine(const Vec& lo, const Vec& hi, const GaussRule& rule, const Integrand& f,
              double coarse, double tol, int depth) {
  const int k = static_cast<int>(lo.size());
  const Vec mid = 0.5 * (lo + hi);
  const int children = 1 << k;
  std::vector<Vec> clo(children, lo), chi(children, hi);
  std::vector<double> values(static_cast<std::size_t>(children));
  for (int c = 0; c < children; ++c) {
    for (int a = 0; a < k; ++a) {
      if (c & (1 << a)) {
        clo[c][a] = mid[a];
      } else {
        chi[c][a] = mid[a];
      }
    }
    values[static_cast<std::size_t>(c)] = cell_rule(clo[c], chi[c], rule, f);
  }
  const double fine = pairwise_sum(values);
  if (std::abs(fine - coarse) <= tol || depth <= 0) return fine;
  for (int c = 0; c < children; ++c) {
    values[static_cast<std::size_t>(c)] =
        refine(clo[c], chi[c], rule, f, values[static_cast<std::size_t>(c)], tol / children,
               depth - 1);
  }
  return pairwise_sum(values);
}

template <typename CellFn>
void for_each_cell(const Box& box, int cells, CellFn&& fn) {
  const int k = box.dim();
  const Vec h = (box.hi - box.lo) / cells;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  Vec lo(k), hi(k);
  while (true) {
    for (int a = 0; a < k; ++a) {
      lo[a] = box.lo[a] + idx[a] * h[a];
      hi[a] = idx[a] + 1 == cells ? box.hi[a] : box.lo[a] + (idx[a] + 1) * h[a];
    }
    fn(lo, hi);
    int a = 0;
    while (a < k && ++idx[a] == cells) idx[a++] = 0;
    if (a == k) break;
  }
}

}  // namespace

double integrate_box(const Box& box, const QuadratureSpec& spec, const Integrand& f) {
  spec.validate();
  if (box.dim() == 0) return f(Vec(0));
  const GaussRule rule = gauss_legendre(spec.gauss_order);
  std::vector<double> cell_sums;
  const double cell_count = std::pow(static_cast<double>(spec.cells_per_axis), box.dim());
  for_each_cell(box, spec.cells_per_axis, [&](const Vec& lo, const Vec& hi) {
    const double coarse = cell_rule(lo, hi, rule, f);
    if (spec.adaptive) {
      cell_sums.push_back(refine(lo, hi, rule, f, coarse, spec.target / cell_count, spec.max_depth));
    } else {
      cell_sums.push_back(coarse);
    }
  });
  return pairwise_sum(cell_sums);
}

void for_each_node(const Box& box, const QuadratureSpec& spec,
                   const std::function<void(const Vec&, double)>& visit) {
  spec.validate();
  if (box.dim() == 0) {
    visit(Vec(0), 1.0);
    return;
  }
  const GaussRule rule = gauss_legendre(spec.gauss_order);
  for_each_cell(box, spec.cells_per_axis, [&](const Vec& lo, const Vec& hi) {
    cell_nodes(lo, hi, rule, visit);
  });
}

}  // namespace variform
