#include "variform/map.hpp"

#include <cmath>

#include "variform/error.hpp"

namespace variform {

struct DifferentiableMap::Impl {
  std::string name;
  int n = 0;
  int m = 0;
  EvalFn eval;
  JacobianFn jacobian;
  std::vector<double> params;
  std::shared_ptr<const Impl> inverse;
};

DifferentiableMap::DifferentiableMap(std::string name, int domain_dim, int codomain_dim,
                                     EvalFn eval, JacobianFn jacobian,
                                     std::vector<double> params) {
  if (domain_dim < 0 || codomain_dim < 1) {
    fail(Errc::invalid_argument, "map '" + name + "' has invalid dimensions");
  }
  if (!eval) fail(Errc::invalid_argument, "map '" + name + "' has no evaluator");
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->n = domain_dim;
  impl->m = codomain_dim;
  impl->eval = std::move(eval);
  impl->jacobian = std::move(jacobian);
  impl->params = std::move(params);
  impl_ = std::move(impl);
}

DifferentiableMap::DifferentiableMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

const std::string& DifferentiableMap::name() const noexcept { return impl_->name; }
int DifferentiableMap::domain_dim() const noexcept { return impl_->n; }
int DifferentiableMap::codomain_dim() const noexcept { return impl_->m; }
const std::vector<double>& DifferentiableMap::params() const noexcept { return impl_->params; }
bool DifferentiableMap::has_analytic_jacobian() const noexcept {
  return static_cast<bool>(impl_->jacobian);
}

Vec DifferentiableMap::operator()(const Vec& x) const {
  if (x.size() != impl_->n) {
    fail(Errc::map_evaluation, "map '" + impl_->name + "' expects " + std::to_string(impl_->n) +
                                   " coordinates, got " + std::to_string(x.size()));
  }
  Vec y = impl_->eval(x);
  if (y.size() != impl_->m) {
    fail(Errc::map_evaluation, "map '" + impl_->name + "' returned wrong length");
  }
  if (!y.allFinite()) fail(Errc::map_evaluation, "map '" + impl_->name + "' is not finite");
  return y;
}

Mat DifferentiableMap::finite_difference_jacobian(const Vec& x) const {
  const double scale = std::max(1.0, x.size() > 0 ? x.cwiseAbs().maxCoeff() : 0.0);
  const double h = 1e-6 * scale;
  Mat J(impl_->m, impl_->n);
  Vec xp = x;
  for (int j = 0; j < impl_->n; ++j) {
    xp[j] = x[j] + h;
    const Vec fp = (*this)(xp);
    xp[j] = x[j] - h;
    const Vec fm = (*this)(xp);
    xp[j] = x[j];
    J.col(j) = (fp - fm) / (2.0 * h);
  }
  return J;
}

Mat DifferentiableMap::jacobian(const Vec& x) const {
  if (!impl_->jacobian) return finite_difference_jacobian(x);
  if (x.size() != impl_->n) {
    fail(Errc::map_evaluation, "jacobian of '" + impl_->name + "' at wrong length point");
  }
  Mat J = impl_->jacobian(x);
  if (J.rows() != impl_->m || J.cols() != impl_->n) {
    fail(Errc::map_evaluation, "jacobian of '" + impl_->name + "' has wrong shape");
  }
  if (!J.allFinite()) fail(Errc::map_evaluation, "jacobian of '" + impl_->name + "' not finite");
  return J;
}

DifferentiableMap DifferentiableMap::with_inverse(const DifferentiableMap& inverse) const {
  if (inverse.domain_dim() != impl_->m || inverse.codomain_dim() != impl_->n) {
    fail(Errc::dimension_mismatch, "inverse of '" + impl_->name + "' has wrong dimensions");
  }
  auto impl = std::make_shared<Impl>(*impl_);
  // the inverse's own inverse is this map
  auto inv = std::make_shared<Impl>(*inverse.impl_);
  inv->inverse = impl_;
  impl->inverse = std::move(inv);
  return DifferentiableMap(std::move(impl));
}

std::optional<DifferentiableMap> DifferentiableMap::inverse() const {
  if (!impl_->inverse) return std::nullopt;
  return DifferentiableMap(impl_->inverse);
}

namespace {

DifferentiableMap compose_plain(const DifferentiableMap& outer, const DifferentiableMap& inner) {
  if (outer.domain_dim() != inner.codomain_dim()) {
    fail(Errc::dimension_mismatch, "cannot compose '" + outer.name() + "' after '" +
                                       inner.name() + "'");
  }
  DifferentiableMap::JacobianFn jac;
  if (outer.has_analytic_jacobian() && inner.has_analytic_jacobian()) {
    jac = [outer, inner](const Vec& x) -> Mat {
      return outer.jacobian(inner(x)) * inner.jacobian(x);
    };
  }
  return DifferentiableMap(
      outer.name() + "*" + inner.name(), inner.domain_dim(), outer.codomain_dim(),
      [outer, inner](const Vec& x) { return outer(inner(x)); }, std::move(jac));
}

}  // namespace

DifferentiableMap compose(const DifferentiableMap& outer, const DifferentiableMap& inner) {
  DifferentiableMap composite = compose_plain(outer, inner);
  auto outer_inv = outer.inverse();
  auto inner_inv = inner.inverse();
  if (outer_inv && inner_inv) {
    return composite.with_inverse(compose_plain(*inner_inv, *outer_inv));
  }
  return composite;
}

double jacobian_fd_discrepancy(const DifferentiableMap& f, const Vec& x) {
  return (f.jacobian(x) - f.finite_difference_jacobian(x)).cwiseAbs().maxCoeff();
}

}  // namespace variform
