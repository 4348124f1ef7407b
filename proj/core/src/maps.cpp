#include "variform/maps.hpp"

#include <cmath>
#include <numbers>

#include "variform/error.hpp"

namespace variform::maps {

namespace {

Vec scalar(double v) {
  Vec out(1);
  out << v;
  return out;
}

Mat column(const Vec& v) { return Mat(v); }

void require_dim(const Vec& v, int n, const char* what) {
  if (v.size() != n) {
    fail(Errc::dimension_mismatch, std::string(what) + " must have length " + std::to_string(n));
  }
}

}  // namespace

DifferentiableMap identity(int n) {
  DifferentiableMap f(
      "identity", n, n, [](const Vec& x) { return x; },
      [n](const Vec&) -> Mat { return Mat::Identity(n, n); });
  return f.with_inverse(f);
}

DifferentiableMap constant(int n, const Vec& value) {
  const int m = static_cast<int>(value.size());
  return DifferentiableMap(
      "constant", n, m, [value](const Vec&) { return value; },
      [n, m](const Vec&) -> Mat { return Mat::Zero(m, n); });
}

DifferentiableMap linear(const Mat& A) {
  return affine(A, Vec::Zero(A.rows()));
}

DifferentiableMap affine(const Mat& A, const Vec& b) {
  if (b.size() != A.rows()) fail(Errc::dimension_mismatch, "affine offset length");
  std::vector<double> params(A.data(), A.data() + A.size());
  params.insert(params.end(), b.data(), b.data() + b.size());
  DifferentiableMap f(
      "affine", static_cast<int>(A.cols()), static_cast<int>(A.rows()),
      [A, b](const Vec& x) -> Vec { return A * x + b; }, [A](const Vec&) -> Mat { return A; },
      std::move(params));
  if (A.rows() == A.cols()) {
    Eigen::FullPivLU<Mat> lu(A);
    if (lu.isInvertible()) {
      const Mat Ainv = lu.inverse();
      DifferentiableMap inv(
          "affine_inverse", static_cast<int>(A.rows()), static_cast<int>(A.cols()),
          [Ainv, b](const Vec& y) -> Vec { return Ainv * (y - b); },
          [Ainv](const Vec&) -> Mat { return Ainv; });
      return f.with_inverse(inv);
    }
  }
  return f;
}

DifferentiableMap polynomial(const std::vector<Polynomial>& components) {
  if (components.empty()) fail(Errc::invalid_argument, "polynomial map needs components");
  const int n = components.front().num_vars();
  for (const auto& p : components) {
    if (p.num_vars() != n) fail(Errc::dimension_mismatch, "polynomial components disagree on variables");
  }
  std::vector<std::vector<Polynomial>> partials(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (int j = 0; j < n; ++j) partials[i].push_back(components[i].derivative(j));
  }
  const int m = static_cast<int>(components.size());
  return DifferentiableMap(
      "polynomial", n, m,
      [components, m](const Vec& x) {
        Vec y(m);
        for (int i = 0; i < m; ++i) y[i] = components[i](x);
        return y;
      },
      [partials, m, n](const Vec& x) {
        Mat J(m, n);
        for (int i = 0; i < m; ++i) {
          for (int j = 0; j < n; ++j) J(i, j) = partials[i][j](x);
        }
        return J;
      });
}

DifferentiableMap circle(double radius, const Vec& center) {
  require_dim(center, 2, "circle center");
  return DifferentiableMap(
      "circle", 1, 2,
      [radius, center](const Vec& t) -> Vec {
        Vec y(2);
        y << std::cos(t[0]), std::sin(t[0]);
        return center + radius * y;
      },
      [radius](const Vec& t) -> Mat {
        Mat J(2, 1);
        J << -radius * std::sin(t[0]), radius * std::cos(t[0]);
        return J;
      },
      {radius, center[0], center[1]});
}

DifferentiableMap helix(double radius, double pitch) {
  return DifferentiableMap(
      "helix", 1, 3,
      [radius, pitch](const Vec& t) -> Vec {
        Vec y(3);
        y << radius * std::cos(t[0]), radius * std::sin(t[0]), pitch * t[0];
        return y;
      },
      [radius, pitch](const Vec& t) -> Mat {
        Mat J(3, 1);
        J << -radius * std::sin(t[0]), radius * std::cos(t[0]), pitch;
        return J;
      },
      {radius, pitch});
}

DifferentiableMap segment(const Vec& p, const Vec& q) {
  const Vec d = q - p;
  return DifferentiableMap(
      "segment", 1, static_cast<int>(p.size()),
      [p, d](const Vec& t) -> Vec { return p + t[0] * d; },
      [d](const Vec&) -> Mat { return column(d); });
}

DifferentiableMap fourier_curve(const Vec& a0, const std::vector<Vec>& cos_coeffs,
                                const std::vector<Vec>& sin_coeffs) {
  const int m = static_cast<int>(a0.size());
  for (const auto& c : cos_coeffs) require_dim(c, m, "fourier cosine coefficient");
  for (const auto& s : sin_coeffs) require_dim(s, m, "fourier sine coefficient");
  return DifferentiableMap(
      "fourier_curve", 1, m,
      [a0, cos_coeffs, sin_coeffs](const Vec& t) -> Vec {
        Vec y = a0;
        for (std::size_t j = 0; j < cos_coeffs.size(); ++j) {
          y += cos_coeffs[j] * std::cos(static_cast<double>(j + 1) * t[0]);
        }
        for (std::size_t j = 0; j < sin_coeffs.size(); ++j) {
          y += sin_coeffs[j] * std::sin(static_cast<double>(j + 1) * t[0]);
        }
        return y;
      },
      [m, cos_coeffs, sin_coeffs](const Vec& t) -> Mat {
        Vec d = Vec::Zero(m);
        for (std::size_t j = 0; j < cos_coeffs.size(); ++j) {
          const double w = static_cast<double>(j + 1);
          d -= w * cos_coeffs[j] * std::sin(w * t[0]);
        }
        for (std::size_t j = 0; j < sin_coeffs.size(); ++j) {
          const double w = static_cast<double>(j + 1);
          d += w * sin_coeffs[j] * std::cos(w * t[0]);
        }
        return column(d);
      });
}

DifferentiableMap torus_patch(double major_radius, double minor_radius) {
  const double R = major_radius;
  const double r = minor_radius;
  return DifferentiableMap(
      "torus_patch", 2, 3,
      [R, r](const Vec& t) -> Vec {
        const double u = t[0], v = t[1];
        Vec y(3);
        y << (R + r * std::cos(v)) * std::cos(u), (R + r * std::cos(v)) * std::sin(u),
            r * std::sin(v);
        return y;
      },
      [R, r](const Vec& t) -> Mat {
        const double u = t[0], v = t[1];
        Mat J(3, 2);
        J << -(R + r * std::cos(v)) * std::sin(u), -r * std::sin(v) * std::cos(u),
            (R + r * std::cos(v)) * std::cos(u), -r * std::sin(v) * std::sin(u), 0.0,
            r * std::cos(v);
        return J;
      },
      {R, r});
}

DifferentiableMap sphere_patch(double radius) {
  return DifferentiableMap(
      "sphere_patch", 2, 3,
      [radius](const Vec& t) -> Vec {
        const double th = t[0], ph = t[1];
        Vec y(3);
        y << std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th);
        return radius * y;
      },
      [radius](const Vec& t) -> Mat {
        const double th = t[0], ph = t[1];
        Mat J(3, 2);
        J << std::cos(th) * std::cos(ph), -std::sin(th) * std::sin(ph),
            std::cos(th) * std::sin(ph), std::sin(th) * std::cos(ph), -std::sin(th), 0.0;
        return radius * J;
      },
      {radius});
}

DifferentiableMap graph_surface(const Polynomial& height) {
  const int k = height.num_vars();
  std::vector<Polynomial> comps;
  for (int i = 0; i < k; ++i) comps.push_back(Polynomial::coordinate(k, i));
  comps.push_back(height);
  DifferentiableMap base = polynomial(comps);
  return DifferentiableMap(
      "graph_surface", k, k + 1, [base](const Vec& t) { return base(t); },
      [base](const Vec& t) { return base.jacobian(t); });
}

DifferentiableMap polar() {
  DifferentiableMap forward(
      "polar", 2, 2,
      [](const Vec& p) -> Vec {
        Vec y(2);
        y << p[0] * std::cos(p[1]), p[0] * std::sin(p[1]);
        return y;
      },
      [](const Vec& p) -> Mat {
        Mat J(2, 2);
        J << std::cos(p[1]), -p[0] * std::sin(p[1]), std::sin(p[1]), p[0] * std::cos(p[1]);
        return J;
      });
  DifferentiableMap inverse(
      "polar_inverse", 2, 2,
      [](const Vec& y) -> Vec {
        Vec p(2);
        p << std::hypot(y[0], y[1]), std::atan2(y[1], y[0]);
        return p;
      },
      [](const Vec& y) -> Mat {
        const double r2 = y.squaredNorm();
        const double r = std::sqrt(r2);
        Mat J(2, 2);
        J << y[0] / r, y[1] / r, -y[1] / r2, y[0] / r2;
        return J;
      });
  return forward.with_inverse(inverse);
}

DifferentiableMap affine_reparam(double scale, double shift) {
  if (scale == 0.0) fail(Errc::invalid_argument, "affine reparametrization with zero scale");
  DifferentiableMap f(
      "affine_reparam", 1, 1, [scale, shift](const Vec& s) { return scalar(scale * s[0] + shift); },
      [scale](const Vec&) -> Mat { return Mat::Constant(1, 1, scale); }, {scale, shift});
  DifferentiableMap inv(
      "affine_reparam_inverse", 1, 1,
      [scale, shift](const Vec& u) { return scalar((u[0] - shift) / scale); },
      [scale](const Vec&) -> Mat { return Mat::Constant(1, 1, 1.0 / scale); });
  return f.with_inverse(inv);
}

DifferentiableMap sine_reparam(double amplitude) {
  const double c = amplitude;
  if (!(std::abs(c) < 1.0)) {
    fail(Errc::invalid_argument, "sine reparametrization needs |amplitude| < 1");
  }
  DifferentiableMap f(
      "sine_reparam", 1, 1, [c](const Vec& s) { return scalar(s[0] + c * std::sin(s[0])); },
      [c](const Vec& s) -> Mat { return Mat::Constant(1, 1, 1.0 + c * std::cos(s[0])); }, {c});
  auto solve = [c](double u) {
    double s = u;
    for (int it = 0; it < 100; ++it) {
      const double step = (s + c * std::sin(s) - u) / (1.0 + c * std::cos(s));
      s -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(s))) break;
    }
    return s;
  };
  DifferentiableMap inv(
      "sine_reparam_inverse", 1, 1, [solve](const Vec& u) { return scalar(solve(u[0])); },
      [solve, c](const Vec& u) -> Mat {
        return Mat::Constant(1, 1, 1.0 / (1.0 + c * std::cos(solve(u[0]))));
      });
  return f.with_inverse(inv);
}

DifferentiableMap inclusion(int k, int m) {
  if (k < 0 || k > m) fail(Errc::invalid_degree, "inclusion needs 0 <= k <= m");
  Mat E = Mat::Zero(m, k);
  E.topLeftCorner(k, k).setIdentity();
  return DifferentiableMap(
      "inclusion", k, m, [E](const Vec& t) -> Vec { return E * t; },
      [E](const Vec&) -> Mat { return E; }, {static_cast<double>(k), static_cast<double>(m)});
}

DifferentiableMap projection(int m, int k) {
  if (k < 1 || k > m) fail(Errc::invalid_degree, "projection needs 1 <= k <= m");
  Mat P = Mat::Zero(k, m);
  P.topLeftCorner(k, k).setIdentity();
  return DifferentiableMap(
      "projection", m, k, [P](const Vec& y) -> Vec { return P * y; },
      [P](const Vec&) -> Mat { return P; }, {static_cast<double>(m), static_cast<double>(k)});
}

DifferentiableMap face_inclusion(int k, int axis, double value) {
  if (k < 1 || axis < 0 || axis >= k) fail(Errc::invalid_argument, "face axis out of range");
  Mat E = Mat::Zero(k, k - 1);
  for (int j = 0, col = 0; j < k; ++j) {
    if (j == axis) continue;
    E(j, col++) = 1.0;
  }
  Vec offset = Vec::Zero(k);
  offset[axis] = value;
  return DifferentiableMap(
      "face", k - 1, k, [E, offset](const Vec& s) -> Vec { return E * s + offset; },
      [E](const Vec&) -> Mat { return E; }, {static_cast<double>(axis), value});
}

DifferentiableMap sum(const DifferentiableMap& f, const DifferentiableMap& g, double s) {
  if (f.domain_dim() != g.domain_dim() || f.codomain_dim() != g.codomain_dim()) {
    fail(Errc::dimension_mismatch, "sum of maps with different shapes");
  }
  DifferentiableMap::JacobianFn jac;
  if (f.has_analytic_jacobian() && g.has_analytic_jacobian()) {
    jac = [f, g, s](const Vec& x) -> Mat { return f.jacobian(x) + s * g.jacobian(x); };
  }
  return DifferentiableMap(
      f.name() + "+" + g.name(), f.domain_dim(), f.codomain_dim(),
      [f, g, s](const Vec& x) -> Vec { return f(x) + s * g(x); }, std::move(jac));
}

DifferentiableMap scaled(const DifferentiableMap& profile, const DifferentiableMap& field) {
  if (profile.codomain_dim() != 1 || profile.domain_dim() != field.domain_dim()) {
    fail(Errc::dimension_mismatch, "scaled map needs a scalar profile on the field's domain");
  }
  DifferentiableMap::JacobianFn jac;
  if (profile.has_analytic_jacobian() && field.has_analytic_jacobian()) {
    jac = [profile, field](const Vec& x) -> Mat {
      return field(x) * profile.jacobian(x) + profile(x)[0] * field.jacobian(x);
    };
  }
  return DifferentiableMap(
      profile.name() + "." + field.name(), field.domain_dim(), field.codomain_dim(),
      [profile, field](const Vec& x) -> Vec { return profile(x)[0] * field(x); },
      std::move(jac));
}

DifferentiableMap sine_bump(double a, double b, int j) {
  if (!(b > a)) fail(Errc::invalid_argument, "sine bump needs a < b");
  if (j < 1) fail(Errc::invalid_argument, "sine bump frequency must be >= 1");
  const double w = std::numbers::pi * j / (b - a);
  return DifferentiableMap(
      "sine_bump", 1, 1, [a, w](const Vec& t) { return scalar(std::sin(w * (t[0] - a))); },
      [a, w](const Vec& t) -> Mat { return Mat::Constant(1, 1, w * std::cos(w * (t[0] - a))); },
      {a, b, static_cast<double>(j)});
}

DifferentiableMap tangent_lift(const DifferentiableMap& curve) {
  if (curve.domain_dim() != 1) fail(Errc::dimension_mismatch, "tangent lift needs a curve");
  const int m = curve.codomain_dim();
  return DifferentiableMap(
      "tangent_lift(" + curve.name() + ")", 1, 2 * m,
      [curve, m](const Vec& t) -> Vec {
        Vec z(2 * m);
        z << curve(t), curve.jacobian(t).col(0);
        return z;
      },
      [curve, m](const Vec& t) -> Mat {
        const double h = 1e-5 * std::max(1.0, std::abs(t[0]));
        Vec tp = t, tm = t;
        tp[0] += h;
        tm[0] -= h;
        Mat J(2 * m, 1);
        J << curve.jacobian(t).col(0),
            (curve.jacobian(tp).col(0) - curve.jacobian(tm).col(0)) / (2.0 * h);
        return J;
      });
}

}  // namespace variform::maps
