#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "variform/map.hpp"
#include "variform/multiindex.hpp"
#include "variform/polynomial.hpp"
#include "variform/quadrature.hpp"

namespace variform {

/// Differential k-form on a chart domain of R^m:
///   eta = sum over increasing I of eta_I(y) dy^{I_1} ^ ... ^ dy^{I_k}.
/// Coefficients are evaluated all at once (ranked as in enumerate()); degree 0
/// has a single coefficient. Partials are analytic when supplied (polynomial
/// forms always have them), otherwise central differences with fd_step.
class KForm {
 public:
  using ValuesFn = std::function<Vec(const Vec&)>;
  using PartialsFn = std::function<Mat(const Vec&)>;  // rows: components, cols: d/dy^j

  static constexpr double kDefaultFdStep = 1e-5;

  KForm(int degree, int dim, ValuesFn values, PartialsFn partials = {},
        double fd_step = kDefaultFdStep);

  static KForm zero(int degree, int dim);
  static KForm constant(int degree, int dim, Vec coeffs);
  /// One polynomial per ranked component.
  static KForm polynomial(int degree, int dim, std::vector<Polynomial> coeffs);
  /// Sparse polynomial form; unmentioned components are zero, repeated
  /// indices add up.
  static KForm from_terms(int degree, int dim,
                          const std::vector<std::pair<MultiIndex, Polynomial>>& terms);

  int degree() const noexcept { return degree_; }
  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return size_; }
  double fd_step() const noexcept { return fd_step_; }
  bool has_analytic_partials() const noexcept { return static_cast<bool>(partials_); }
  const std::optional<std::vector<Polynomial>>& polynomial_coefficients() const noexcept {
    return poly_;
  }

  /// Throws evaluation on a non-finite coefficient.
  Vec coefficients(const Vec& y) const;
  Mat partials(const Vec& y) const;

  KForm scaled(double s) const;
  KForm operator+(const KForm& other) const;

 private:
  int degree_;
  int dim_;
  std::size_t size_;
  ValuesFn values_;
  PartialsFn partials_;
  double fd_step_;
  std::optional<std::vector<Polynomial>> poly_;
};

/// Compact k-piece: the image of a parameter box under a parametrization, with
/// an orientation flag (+1 keeps the parameter orientation, -1 reverses it).
struct Piece {
  Box param_box;
  DifferentiableMap map;
  int orientation;

  Piece(Box box, DifferentiableMap parametrization, int orientation = 1);

  int degree() const noexcept { return param_box.dim(); }
  int ambient_dim() const noexcept { return map.codomain_dim(); }

  /// Number of grid samples (samples_per_axis^k, cell centers) where the
  /// canonical lift of the parametrization vanishes.
  std::size_t count_degenerate(int samples_per_axis = 8) const;
};

/// Nonnegative functions chi_j on a parameter box, each supported in its own
/// subbox, summing to one.
class PartitionOfUnity {
 public:
  using Function = std::function<double(const Vec&)>;

  /// Products of exp(-1/(1-s^2)) bumps over the axes of each cover box,
  /// normalized by their pointwise sum. Cover faces lying on the parameter
  /// box boundary are pushed outward so the boundary stays covered. Throws
  /// invalid_partition when a cover box misses the parameter box or a point
  /// of a coarse sample grid is left uncovered.
  static PartitionOfUnity mollified(const Box& param_box, std::vector<Box> cover);

  /// Arbitrary user functions; the sum-to-one property is checked during
  /// integration.
  static PartitionOfUnity from_functions(std::vector<Function> functions,
                                         std::vector<Box> supports);

  std::size_t size() const noexcept { return functions_.size(); }
  const Box& support(std::size_t j) const { return supports_.at(j); }
  double operator()(std::size_t j, const Vec& t) const { return functions_.at(j)(t); }
  double sum(const Vec& t) const;

 private:
  std::vector<Function> functions_;
  std::vector<Box> supports_;
};

struct IntegrationDiagnostics {
  std::size_t degenerate_nodes = 0;
  std::vector<std::string> warnings;
};

/// Both sides of a verified identity and their absolute difference.
struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

/// f^* eta on the domain of f: coefficient J = sum_I eta_I(f(t)) det(Df[I, J]).
KForm pullback(const KForm& eta, const DifferentiableMap& f);

/// Orientation times the quadrature of the pulled-back top coefficient.
/// Nodes where the parametrization is not an immersion are counted in `diag`
/// (integration proceeds).
double integrate(const KForm& eta, const Piece& piece, const QuadratureSpec& spec,
                 IntegrationDiagnostics* diag = nullptr);

/// sum_j of the integral of chi_j times the pulled-back coefficient, each over
/// the support of chi_j and refined adaptively from `spec` (target
/// min(spec.target, 1e-11)): the chi_j vary on the scale of the overlaps.
/// Throws invalid_partition if the chi_j do not sum to one (1e-10) at a node.
double integrate_with_partition(const KForm& eta, const Piece& piece,
                                const PartitionOfUnity& partition, const QuadratureSpec& spec);

/// Degree k+1 form; exact for polynomial forms.
KForm exterior_derivative(const KForm& eta);

/// The 2k faces of the parameter box with induced (outward-normal-first)
/// orientations: face at the upper end of axis a (1-based) carries
/// (-1)^(a+1), the lower end (-1)^a, both times the piece's orientation.
std::vector<Piece> boundary_faces(const Piece& piece);

/// Integral of eta over the boundary faces against the integral of d(eta).
IdentityCheck verify_stokes(const KForm& eta, const Piece& piece, const QuadratureSpec& spec);

/// Integral of eta over the piece against the integral of alpha^* eta over
/// alpha^{-1}(piece). alpha must be square, carry an inverse, and preserve
/// orientation at every quadrature node (orientation_violation otherwise).
IdentityCheck verify_domain_transform(const KForm& eta, const DifferentiableMap& alpha,
                                      const Piece& piece, const QuadratureSpec& spec);

/// One-parameter family of forms with its analytic parameter derivative.
struct FormFamily {
  std::function<KForm(double)> at;
  std::function<KForm(double)> derivative;
};

enum class FamilyProfile { constant, linear, sine };

/// profile(t) * base, e.g. sin(t) * eta.
FormFamily scaled_family(const KForm& base, FamilyProfile profile);

/// Central difference of t -> integral of eta_t at t0 against the integral of
/// the analytic derivative at t0.
IdentityCheck verify_leibniz(const FormFamily& family, const Piece& piece, double t0,
                             double dt_step, const QuadratureSpec& spec);

}  // namespace variform
