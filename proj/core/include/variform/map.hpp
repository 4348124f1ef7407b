#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "variform/types.hpp"

namespace variform {

/// Smooth map R^n -> R^m in explicit chart coordinates.
///
/// Instances are immutable and cheap to copy (shared implementation). The
/// Jacobian is analytic when the constructor receives one, otherwise central
/// differences with step 1e-6 * max(1, |x|_inf) are used.
class DifferentiableMap {
 public:
  using EvalFn = std::function<Vec(const Vec&)>;
  using JacobianFn = std::function<Mat(const Vec&)>;

  DifferentiableMap(std::string name, int domain_dim, int codomain_dim, EvalFn eval,
                    JacobianFn jacobian = {}, std::vector<double> params = {});

  const std::string& name() const noexcept;
  int domain_dim() const noexcept;
  int codomain_dim() const noexcept;
  const std::vector<double>& params() const noexcept;
  bool has_analytic_jacobian() const noexcept;

  /// Throws map_evaluation on a wrong argument length or a non-finite result.
  Vec operator()(const Vec& x) const;
  /// codomain_dim x domain_dim.
  Mat jacobian(const Vec& x) const;
  Mat finite_difference_jacobian(const Vec& x) const;

  /// Returns a copy that knows its inverse (used for change-of-domain checks
  /// and reparametrizations).
  DifferentiableMap with_inverse(const DifferentiableMap& inverse) const;
  std::optional<DifferentiableMap> inverse() const;

 private:
  struct Impl;
  explicit DifferentiableMap(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// outer o inner. The composite is analytic when both factors are, and carries
/// an inverse when both factors do.
DifferentiableMap compose(const DifferentiableMap& outer, const DifferentiableMap& inner);

/// Largest absolute entry of (analytic Jacobian - central differences) at x.
double jacobian_fd_discrepancy(const DifferentiableMap& f, const Vec& x);

}  // namespace variform
