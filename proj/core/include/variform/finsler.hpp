#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "variform/forms.hpp"
#include "variform/map.hpp"
#include "variform/types.hpp"

namespace variform {

enum class MetricKind {
  euclidean,
  riemannian,
  randers,
  mth_root,
  areal_gram,
  squared_norm,  // |v|^2: deliberately 2-homogeneous, for negative checks
};

std::string_view to_string(MetricKind kind);
std::optional<MetricKind> metric_kind_from_string(std::string_view name);

/// Symmetric positive-definite matrix field y -> g(y): either constant, or
/// conformal (1 + c |y|^2) g0 with c >= 0.
class MetricField {
 public:
  static MetricField constant(Mat g);
  static MetricField conformal(Mat g, double c);

  Mat operator()(const Vec& y) const;
  int dim() const noexcept { return static_cast<int>(g0_.rows()); }
  const Mat& base_matrix() const noexcept { return g0_; }
  double conformal_coefficient() const noexcept { return c_; }

 private:
  MetricField(Mat g, double c);
  Mat g0_;
  double c_;
};

/// Fundamental function F(y, v) of a Finsler structure on a chart of R^m, or
/// an areal Lagrangian L(y, xi) on k-vectors. `fiber` is a tangent vector
/// (length m) or the ranked components of a k-vector (length C(m, k)).
class FinslerFunction {
 public:
  static FinslerFunction euclidean(int dim);
  static FinslerFunction riemannian(MetricField g);
  /// sqrt(v^T g v) + b.v; rejects |b|_g >= 1.
  static FinslerFunction randers(MetricField g, Vec b);
  /// (sum_i a_i v_i^4)^(1/4) with a_i > 0. Only root == 4 is supported.
  static FinslerFunction mth_root(Vec coeffs, int root = 4);
  /// Euclidean norm of the k-vector components (the k-area density).
  static FinslerFunction areal_gram(int k, int dim);
  static FinslerFunction squared_norm(int dim);

  MetricKind kind() const noexcept { return kind_; }
  int dim() const noexcept { return dim_; }
  int fiber_dim() const noexcept { return fiber_dim_; }
  /// Dimension of the submanifolds the function measures (1 for curves).
  int degree() const noexcept { return degree_; }
  bool homogeneous_by_construction() const noexcept { return kind_ != MetricKind::squared_norm; }
  std::string describe() const;

  double operator()(const Vec& y, const Vec& fiber) const;
  /// dF/d(fiber). Throws slit_domain when |fiber|_inf <= 1e-13 max(1, |y|_inf).
  Vec fiber_gradient(const Vec& y, const Vec& fiber) const;

 private:
  FinslerFunction(MetricKind kind, int dim, int fiber_dim, int degree);
  void check_args(const Vec& y, const Vec& fiber) const;

  MetricKind kind_;
  int dim_;
  int fiber_dim_;
  int degree_;
  std::optional<MetricField> g_;
  Vec b_;
  Vec coeffs_;
};

struct SamplingSpec {
  int samples = 100;
  std::vector<double> lambdas{0.5, 2.0, 10.0};
  std::uint64_t seed = 42;
  double domain_radius = 1.0;  // base points drawn uniformly from [-r, r]^m
};

/// max over samples and lambdas of |F(y, l v) - l F(y, v)| / (|l F(y, v)| + 1e-300).
double check_homogeneity(const FinslerFunction& F, const SamplingSpec& spec);

/// max over samples and lambdas of |dF(y, l v) - dF(y, v)|_inf: 0-homogeneity
/// of the Hilbert form coefficients.
double check_projectability(const FinslerFunction& F, const SamplingSpec& spec);

/// max over samples of |sum_nu v^nu dF/dv^nu - F|.
double check_euler_identity(const FinslerFunction& F, const SamplingSpec& spec);

/// max over samples of |analytic fiber gradient - central differences|_inf.
double check_fiber_gradient(const FinslerFunction& F, const SamplingSpec& spec);

/// eta = dF/dv^nu dy^nu as a 1-form on the chart (y, v) of TY (dimension 2m).
/// Only curve metrics have one (unsupported_degree for areal Lagrangians).
KForm hilbert_form(const FinslerFunction& F);

/// max over t of |sum_nu dF/dv^nu(zeta, zeta') zeta'^nu - F(zeta, zeta')|.
/// Throws immersion_failure where zeta' vanishes.
double pullback_identity_residual(const FinslerFunction& F, const DifferentiableMap& curve,
                                  std::span<const double> t_samples);

}  // namespace variform
