#include "variform/functional.hpp"

#include <cmath>
#include <sstream>

#include "variform/error.hpp"
#include "variform/kvector.hpp"
#include "variform/maps.hpp"

namespace variform {

namespace {

constexpr double kCrossCheckTol = 1e-10;
constexpr double kHomogeneityTol = 1e-11;
constexpr double kConsistencyTol = 1e-5;

// A small fixed-seed sample keeps repeated calls cheap and deterministic.
double quick_homogeneity(const FinslerFunction& F) {
  SamplingSpec s;
  s.samples = 16;
  return check_homogeneity(F, s);
}

void check_interval(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || b < a) {
    fail(Errc::invalid_argument, "curve interval must satisfy a <= b");
  }
}

void check_curve(const FinslerFunction& F, const DifferentiableMap& curve) {
  if (F.degree() != 1) fail(Errc::unsupported_degree, "curve length needs a curve metric");
  if (curve.domain_dim() != 1 || curve.codomain_dim() != F.dim()) {
    fail(Errc::dimension_mismatch, "curve '" + curve.name() + "' does not match metric " +
                                       F.describe());
  }
}

Vec velocity(const DifferentiableMap& curve, const Vec& t, const Vec& y) {
  Vec v = curve.jacobian(t).col(0);
  if (!(v.cwiseAbs().maxCoeff() > 1e-13 * std::max(1.0, y.cwiseAbs().maxCoeff()))) {
    std::ostringstream os;
    os << "curve '" << curve.name() << "' is not immersed at t = " << t[0];
    fail(Errc::immersion_failure, os.str());
  }
  return v;
}

}  // namespace

double curve_length_value(const FinslerFunction& F, const DifferentiableMap& curve, double a,
                          double b, const QuadratureSpec& q) {
  check_curve(F, curve);
  check_interval(a, b);
  if (a == b) return 0.0;
  return integrate_box(Box::interval(a, b), q, [&](const Vec& t) {
    const Vec y = curve(t);
    return F(y, velocity(curve, t, y));
  });
}

LengthResult curve_length(const FinslerFunction& F, const DifferentiableMap& curve, double a,
                          double b, const QuadratureSpec& q) {
  LengthResult r;
  r.value = curve_length_value(F, curve, a, b, q);
  r.homogeneity_residual = quick_homogeneity(F);
  const bool homogeneous = r.homogeneity_residual <= kHomogeneityTol;
  if (!homogeneous) {
    r.warnings.push_back("metric " + F.describe() +
                         " is not 1-homogeneous: the value depends on the parametrization");
  }
  if (a < b) {
    const Piece lifted(Box::interval(a, b), maps::tangent_lift(curve));
    r.hilbert_value = integrate(hilbert_form(F), lifted, q);
  }
  r.cross_check = std::abs(r.value - r.hilbert_value);
  if (homogeneous && r.cross_check > kCrossCheckTol) {
    std::ostringstream os;
    os << "direct and Hilbert-form lengths differ by " << r.cross_check;
    r.warnings.push_back(os.str());
  }
  return r;
}

ArealResult areal_value(const FinslerFunction& L, const Piece& piece, const QuadratureSpec& q) {
  if (L.degree() != piece.degree() || L.dim() != piece.ambient_dim()) {
    fail(Errc::dimension_mismatch, "Lagrangian " + L.describe() + " does not match the piece");
  }
  ArealResult r;
  r.homogeneity_residual = quick_homogeneity(L);
  if (r.homogeneity_residual > kHomogeneityTol) {
    r.warnings.push_back("Lagrangian " + L.describe() + " is not 1-homogeneous in the k-vector");
  }
  const double sign = piece.orientation;
  r.value = integrate_box(piece.param_box, q, [&](const Vec& t) {
    const KVector xi = canonical_lift(piece.map, t);
    return L(xi.base(), sign * xi.comps());
  });
  return r;
}

IdentityCheck reparam_invariance_residual(const FinslerFunction& F, const DifferentiableMap& curve,
                                          double a, double b, const DifferentiableMap& rho,
                                          const QuadratureSpec& q) {
  if (rho.domain_dim() != 1 || rho.codomain_dim() != 1) {
    fail(Errc::dimension_mismatch, "reparametrization must map R to R");
  }
  const auto inv = rho.inverse();
  if (!inv) fail(Errc::invalid_argument, "reparametrization '" + rho.name() + "' has no inverse");
  Vec t(1);
  t[0] = a;
  const double sa = (*inv)(t)[0];
  t[0] = b;
  const double sb = (*inv)(t)[0];
  if (!(sa <= sb)) {
    fail(Errc::orientation_violation, "reparametrization '" + rho.name() + "' reverses the interval");
  }
  if (sa < sb) {
    for_each_node(Box::interval(sa, sb), q, [&](const Vec& s, double) {
      if (!(rho.jacobian(s)(0, 0) > 0.0)) {
        std::ostringstream os;
        os << "reparametrization '" << rho.name() << "' has non-positive derivative at s = " << s[0];
        fail(Errc::orientation_violation, os.str());
      }
    });
  }
  IdentityCheck c;
  c.lhs = curve_length_value(F, curve, a, b, q);
  c.rhs = curve_length_value(F, compose(curve, rho), sa, sb, q);
  c.residual = std::abs(c.lhs - c.rhs);
  return c;
}

// ---------------------------------------------------------------- variations

VariationField::VariationField(DifferentiableMap field, double a, double b)
    : field_(std::move(field)), a_(a), b_(b) {
  check_interval(a, b);
  if (field_.domain_dim() != 1) fail(Errc::dimension_mismatch, "variation field must be a curve");
  Vec t(1);
  for (double end : {a, b}) {
    t[0] = end;
    const double v = field_(t).cwiseAbs().maxCoeff();
    if (v > kEndpointTol) {
      std::ostringstream os;
      os << "variation field '" << field_.name() << "' is " << v << " at endpoint " << end;
      fail(Errc::invalid_argument, os.str());
    }
  }
}

VariationField VariationField::zero(int dim, double a, double b) {
  return VariationField(maps::constant(1, Vec::Zero(dim)), a, b);
}

VariationField VariationField::sine_bump(double a, double b, int j, const Vec& direction) {
  return VariationField(maps::scaled(maps::sine_bump(a, b, j), maps::constant(1, direction)), a, b);
}

VariationField VariationField::radial_bump(double a, double b, int j) {
  return VariationField(maps::scaled(maps::sine_bump(a, b, j), maps::circle(1.0, Vec::Zero(2))), a,
                        b);
}

std::vector<VariationField> VariationField::default_basis(int dim, double a, double b,
                                                          int max_frequency) {
  std::vector<VariationField> out;
  for (int i = 0; i < dim; ++i) {
    for (int j = 1; j <= max_frequency; ++j) {
      out.push_back(sine_bump(a, b, j, Vec::Unit(dim, i)));
    }
  }
  return out;
}

VariationResult first_variation(const FinslerFunction& F, const DifferentiableMap& curve,
                                const VariationField& V, double eps, const QuadratureSpec& q) {
  if (!(eps > 0.0)) fail(Errc::invalid_argument, "variation step must be positive");
  if (V.dim() != curve.codomain_dim()) {
    fail(Errc::dimension_mismatch, "variation field and curve live in different spaces");
  }
  const auto central = [&](double e) {
    const double up = curve_length_value(F, maps::sum(curve, V.map(), e), V.a(), V.b(), q);
    const double down = curve_length_value(F, maps::sum(curve, V.map(), -e), V.a(), V.b(), q);
    return (up - down) / (2.0 * e);
  };
  VariationResult r;
  r.value = central(eps);
  r.half_step = central(0.5 * eps);
  r.consistent = std::abs(r.value - r.half_step) <= kConsistencyTol;
  return r;
}

ExtremalResult extremal_residual(const FinslerFunction& F, const DifferentiableMap& curve, double a,
                                 double b, std::vector<VariationField> basis, double eps,
                                 const QuadratureSpec& q) {
  if (basis.empty()) basis = VariationField::default_basis(curve.codomain_dim(), a, b);
  ExtremalResult r;
  for (const auto& V : basis) {
    if (V.a() != a || V.b() != b) {
      fail(Errc::invalid_argument, "variation field '" + V.map().name() + "' is on another interval");
    }
    const VariationResult v = first_variation(F, curve, V, eps, q);
    r.variations.push_back(v.value);
    r.residual = std::max(r.residual, std::abs(v.value));
    r.consistent = r.consistent && v.consistent;
  }
  return r;
}

}  // namespace variform
