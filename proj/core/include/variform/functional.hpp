#pragma once

#include <optional>
#include <string>
#include <vector>

#include "variform/finsler.hpp"
#include "variform/forms.hpp"
#include "variform/map.hpp"
#include "variform/quadrature.hpp"

namespace variform {

struct LengthResult {
  double value = 0.0;          // quadrature of F(zeta, zeta')
  double hilbert_value = 0.0;  // quadrature of the pulled-back Hilbert form
  double cross_check = 0.0;    // |value - hilbert_value|
  double homogeneity_residual = 0.0;
  std::vector<std::string> warnings;
};

/// Finsler length of zeta over [a, b], computed directly and through the
/// Hilbert form. Disagreement above 1e-10, or a metric failing the
/// homogeneity check, is reported in `warnings` (the value is still returned).
/// Throws immersion_failure where zeta' vanishes.
LengthResult curve_length(const FinslerFunction& F, const DifferentiableMap& curve, double a,
                          double b, const QuadratureSpec& q = {});

/// Direct route only, without diagnostics.
double curve_length_value(const FinslerFunction& F, const DifferentiableMap& curve, double a,
                          double b, const QuadratureSpec& q = {});

struct ArealResult {
  double value = 0.0;
  double homogeneity_residual = 0.0;
  std::vector<std::string> warnings;
};

/// Quadrature of L(map(t), +-canonical_lift(map, t)) over the parameter box,
/// the sign being the piece's orientation.
ArealResult areal_value(const FinslerFunction& L, const Piece& piece, const QuadratureSpec& q = {});

/// lhs: length over [a, b]; rhs: length of zeta o rho over rho^{-1}([a, b]).
/// rho must carry an inverse; orientation_violation when rho' <= 0 at a node.
IdentityCheck reparam_invariance_residual(const FinslerFunction& F, const DifferentiableMap& curve,
                                          double a, double b, const DifferentiableMap& rho,
                                          const QuadratureSpec& q = {});

/// Variation direction V: [a, b] -> R^m, vanishing at both ends.
class VariationField {
 public:
  static constexpr double kEndpointTol = 1e-14;

  VariationField(DifferentiableMap field, double a, double b);

  static VariationField zero(int dim, double a, double b);
  /// sin(pi j (t - a) / (b - a)) * direction
  static VariationField sine_bump(double a, double b, int j, const Vec& direction);
  /// sin(pi j (t - a) / (b - a)) * (cos t, sin t): radial for arcs of circles
  /// centered at the origin.
  static VariationField radial_bump(double a, double b, int j);
  /// Sine bumps j = 1..max_frequency along each coordinate axis.
  static std::vector<VariationField> default_basis(int dim, double a, double b,
                                                   int max_frequency = 4);

  const DifferentiableMap& map() const noexcept { return field_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  int dim() const noexcept { return field_.codomain_dim(); }

 private:
  DifferentiableMap field_;
  double a_;
  double b_;
};

struct VariationResult {
  double value = 0.0;       // central difference at eps
  double half_step = 0.0;   // central difference at eps / 2
  bool consistent = true;   // |value - half_step| <= 1e-5
};

VariationResult first_variation(const FinslerFunction& F, const DifferentiableMap& curve,
                                const VariationField& V, double eps = 1e-4,
                                const QuadratureSpec& q = {});

struct ExtremalResult {
  double residual = 0.0;  // max |first variation|
  std::vector<double> variations;
  bool consistent = true;
};

/// max |first_variation| over the basis (default_basis when empty).
ExtremalResult extremal_residual(const FinslerFunction& F, const DifferentiableMap& curve, double a,
                                 double b, std::vector<VariationField> basis = {},
                                 double eps = 1e-4, const QuadratureSpec& q = {});

}  // namespace variform
