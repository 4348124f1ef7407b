#include "variform/finsler.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "variform/error.hpp"
#include "variform/multiindex.hpp"

namespace variform {

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::euclidean: return "euclidean";
    case MetricKind::riemannian: return "riemannian";
    case MetricKind::randers: return "randers";
    case MetricKind::mth_root: return "mth_root";
    case MetricKind::areal_gram: return "areal_gram";
    case MetricKind::squared_norm: return "squared_norm";
  }
  return "unknown";
}

std::optional<MetricKind> metric_kind_from_string(std::string_view name) {
  for (MetricKind k : {MetricKind::euclidean, MetricKind::riemannian, MetricKind::randers,
                       MetricKind::mth_root, MetricKind::areal_gram, MetricKind::squared_norm}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- MetricField

MetricField::MetricField(Mat g, double c) : g0_(std::move(g)), c_(c) {
  if (g0_.rows() != g0_.cols() || g0_.rows() < 1) {
    fail(Errc::dimension_mismatch, "metric matrix must be square");
  }
  if (!g0_.allFinite() || (g0_ - g0_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * g0_.cwiseAbs().maxCoeff()) {
    fail(Errc::invalid_argument, "metric matrix must be symmetric");
  }
  if (Eigen::LLT<Mat>(g0_).info() != Eigen::Success) {
    fail(Errc::invalid_argument, "metric matrix must be positive definite");
  }
  if (!(c_ >= 0.0)) fail(Errc::invalid_argument, "conformal coefficient must be >= 0");
}

MetricField MetricField::constant(Mat g) { return MetricField(std::move(g), 0.0); }

MetricField MetricField::conformal(Mat g, double c) { return MetricField(std::move(g), c); }

Mat MetricField::operator()(const Vec& y) const {
  if (c_ == 0.0) return g0_;
  return (1.0 + c_ * y.squaredNorm()) * g0_;
}

// ---------------------------------------------------------------- FinslerFunction

FinslerFunction::FinslerFunction(MetricKind kind, int dim, int fiber_dim, int degree)
    : kind_(kind), dim_(dim), fiber_dim_(fiber_dim), degree_(degree) {
  if (dim_ < 1) fail(Errc::invalid_argument, "metric dimension must be >= 1");
}

FinslerFunction FinslerFunction::euclidean(int dim) {
  return FinslerFunction(MetricKind::euclidean, dim, dim, 1);
}

FinslerFunction FinslerFunction::riemannian(MetricField g) {
  FinslerFunction F(MetricKind::riemannian, g.dim(), g.dim(), 1);
  F.g_ = std::move(g);
  return F;
}

FinslerFunction FinslerFunction::randers(MetricField g, Vec b) {
  if (b.size() != g.dim()) fail(Errc::dimension_mismatch, "randers covector length");
  // |b|_{g(y)} <= |b|_{g0} because the conformal factor is >= 1
  const double bnorm = std::sqrt(b.dot(g.base_matrix().llt().solve(b)));
  if (!(bnorm < 1.0)) {
    fail(Errc::invalid_argument, "randers data needs |b|_g < 1 (got " + std::to_string(bnorm) + ")");
  }
  FinslerFunction F(MetricKind::randers, g.dim(), g.dim(), 1);
  F.g_ = std::move(g);
  F.b_ = std::move(b);
  return F;
}

FinslerFunction FinslerFunction::mth_root(Vec coeffs, int root) {
  if (root != 4) fail(Errc::invalid_argument, "only quartic (m = 4) root metrics are supported");
  if (coeffs.size() < 1 || !(coeffs.minCoeff() > 0.0)) {
    fail(Errc::invalid_argument, "m-th root coefficients must be positive");
  }
  const int dim = static_cast<int>(coeffs.size());
  FinslerFunction F(MetricKind::mth_root, dim, dim, 1);
  F.coeffs_ = std::move(coeffs);
  return F;
}

FinslerFunction FinslerFunction::areal_gram(int k, int dim) {
  if (k < 1 || k > dim) fail(Errc::invalid_degree, "areal degree must be in 1..dim");
  return FinslerFunction(MetricKind::areal_gram, dim, static_cast<int>(binomial(dim, k)), k);
}

FinslerFunction FinslerFunction::squared_norm(int dim) {
  return FinslerFunction(MetricKind::squared_norm, dim, dim, 1);
}

std::string FinslerFunction::describe() const {
  std::ostringstream os;
  os << to_string(kind_) << "(dim=" << dim_;
  if (kind_ == MetricKind::areal_gram) os << ", k=" << degree_;
  if (g_ && g_->conformal_coefficient() > 0.0) os << ", conformal=" << g_->conformal_coefficient();
  if (kind_ == MetricKind::randers) os << ", |b|=" << b_.norm();
  os << ')';
  return os.str();
}

void FinslerFunction::check_args(const Vec& y, const Vec& fiber) const {
  if (y.size() != dim_ || fiber.size() != fiber_dim_) {
    fail(Errc::dimension_mismatch, "metric " + describe() + " evaluated with wrong lengths");
  }
}

double FinslerFunction::operator()(const Vec& y, const Vec& v) const {
  check_args(y, v);
  switch (kind_) {
    case MetricKind::euclidean:
    case MetricKind::areal_gram: return v.norm();
    case MetricKind::riemannian: return std::sqrt(v.dot((*g_)(y) * v));
    case MetricKind::randers: return std::sqrt(v.dot((*g_)(y) * v)) + b_.dot(v);
    case MetricKind::mth_root: {
      const Vec v2 = v.cwiseAbs2();
      return std::pow(coeffs_.dot(v2.cwiseAbs2()), 0.25);
    }
    case MetricKind::squared_norm: return v.squaredNorm();
  }
  fail(Errc::invalid_argument, "unknown metric kind");
}

Vec FinslerFunction::fiber_gradient(const Vec& y, const Vec& v) const {
  check_args(y, v);
  const double scale = std::max(1.0, y.size() ? y.cwiseAbs().maxCoeff() : 0.0);
  if (!(v.cwiseAbs().maxCoeff() > 1e-13 * scale)) {
    fail(Errc::slit_domain, "fiber gradient of " + describe() + " at the zero section");
  }
  switch (kind_) {
    case MetricKind::euclidean:
    case MetricKind::areal_gram: return v / v.norm();
    case MetricKind::riemannian: {
      const Vec gv = (*g_)(y) * v;
      return gv / std::sqrt(v.dot(gv));
    }
    case MetricKind::randers: {
      const Vec gv = (*g_)(y) * v;
      return gv / std::sqrt(v.dot(gv)) + b_;
    }
    case MetricKind::mth_root: {
      const double F = (*this)(y, v);
      return coeffs_.cwiseProduct(v.cwiseAbs2().cwiseProduct(v)) / (F * F * F);
    }
    case MetricKind::squared_norm: return 2.0 * v;
  }
  fail(Errc::invalid_argument, "unknown metric kind");
}

// ---------------------------------------------------------------- checks

namespace {

struct Sample {
  Vec y;
  Vec v;
};

// Base points uniform in the box, fibers standard normal; (near-)zero fibers
// are redrawn.
std::vector<Sample> draw_samples(const FinslerFunction& F, const SamplingSpec& spec) {
  if (spec.samples < 1) fail(Errc::invalid_argument, "sample count must be >= 1");
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> uni(-spec.domain_radius, spec.domain_radius);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(spec.samples));
  while (static_cast<int>(out.size()) < spec.samples) {
    Sample s{Vec(F.dim()), Vec(F.fiber_dim())};
    for (Eigen::Index i = 0; i < s.y.size(); ++i) s.y[i] = uni(rng);
    for (Eigen::Index i = 0; i < s.v.size(); ++i) s.v[i] = normal(rng);
    if (s.v.cwiseAbs().maxCoeff() < 1e-6) continue;
    out.push_back(std::move(s));
  }
  return out;
}

void check_lambdas(const SamplingSpec& spec) {
  if (spec.lambdas.empty()) fail(Errc::invalid_argument, "no scaling factors given");
  for (double l : spec.lambdas) {
    if (!(l > 0.0)) fail(Errc::invalid_argument, "scaling factors must be positive");
  }
}

}  // namespace

double check_homogeneity(const FinslerFunction& F, const SamplingSpec& spec) {
  check_lambdas(spec);
  double worst = 0.0;
  for (const auto& [y, v] : draw_samples(F, spec)) {
    const double base = F(y, v);
    for (double l : spec.lambdas) {
      const double r = std::abs(F(y, l * v) - l * base) / (std::abs(l * base) + 1e-300);
      worst = std::max(worst, r);
    }
  }
  return worst;
}

double check_projectability(const FinslerFunction& F, const SamplingSpec& spec) {
  check_lambdas(spec);
  double worst = 0.0;
  for (const auto& [y, v] : draw_samples(F, spec)) {
    const Vec g = F.fiber_gradient(y, v);
    for (double l : spec.lambdas) {
      worst = std::max(worst, (F.fiber_gradient(y, l * v) - g).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double check_euler_identity(const FinslerFunction& F, const SamplingSpec& spec) {
  double worst = 0.0;
  for (const auto& [y, v] : draw_samples(F, spec)) {
    worst = std::max(worst, std::abs(F.fiber_gradient(y, v).dot(v) - F(y, v)));
  }
  return worst;
}

double check_fiber_gradient(const FinslerFunction& F, const SamplingSpec& spec) {
  double worst = 0.0;
  for (const auto& [y, v] : draw_samples(F, spec)) {
    const double h = 1e-6 * std::max(1.0, v.cwiseAbs().maxCoeff());
    const Vec g = F.fiber_gradient(y, v);
    Vec vp = v;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      vp[i] = v[i] + h;
      const double fp = F(y, vp);
      vp[i] = v[i] - h;
      const double fm = F(y, vp);
      vp[i] = v[i];
      worst = std::max(worst, std::abs((fp - fm) / (2.0 * h) - g[i]));
    }
  }
  return worst;
}

KForm hilbert_form(const FinslerFunction& F) {
  if (F.degree() != 1) {
    fail(Errc::unsupported_degree, "Hilbert form is only constructed for curve metrics");
  }
  const int m = F.dim();
  // coordinates (y^1..y^m, v^1..v^m); the dv components vanish
  return KForm(1, 2 * m, [F, m](const Vec& z) -> Vec {
    Vec c = Vec::Zero(2 * m);
    c.head(m) = F.fiber_gradient(z.head(m), z.tail(m));
    return c;
  });
}

double pullback_identity_residual(const FinslerFunction& F, const DifferentiableMap& curve,
                                  std::span<const double> t_samples) {
  if (F.degree() != 1 || curve.domain_dim() != 1 || curve.codomain_dim() != F.dim()) {
    fail(Errc::dimension_mismatch, "pullback identity needs a curve in the metric's chart");
  }
  double worst = 0.0;
  Vec t(1);
  for (double s : t_samples) {
    t[0] = s;
    const Vec y = curve(t);
    const Vec v = curve.jacobian(t).col(0);
    if (!(v.cwiseAbs().maxCoeff() > 0.0)) {
      fail(Errc::immersion_failure, "curve '" + curve.name() + "' has zero velocity at t = " +
                                        std::to_string(s));
    }
    worst = std::max(worst, std::abs(F.fiber_gradient(y, v).dot(v) - F(y, v)));
  }
  return worst;
}

}  // namespace variform
