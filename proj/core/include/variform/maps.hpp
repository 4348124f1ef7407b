#pragma once

#include <vector>

#include "variform/map.hpp"
#include "variform/polynomial.hpp"

// Catalog of named maps with analytic Jacobians. Scenario files refer to these
// by name; tests use them as smooth, exactly differentiable inputs.
namespace variform::maps {

DifferentiableMap identity(int n);
DifferentiableMap constant(int n, const Vec& value);
/// x -> A x (inverse attached when A is square and invertible)
DifferentiableMap linear(const Mat& A);
/// x -> A x + b
DifferentiableMap affine(const Mat& A, const Vec& b);
/// One polynomial per output coordinate, all in the same variables.
DifferentiableMap polynomial(const std::vector<Polynomial>& components);

/// t -> center + r (cos t, sin t)
DifferentiableMap circle(double radius, const Vec& center);
/// t -> (r cos t, r sin t, pitch t)
DifferentiableMap helix(double radius, double pitch);
/// t -> p + t (q - p)
DifferentiableMap segment(const Vec& p, const Vec& q);
/// t -> a0 + sum_j (cos_j cos(j t) + sin_j sin(j t)); j counts from 1
DifferentiableMap fourier_curve(const Vec& a0, const std::vector<Vec>& cos_coeffs,
                                const std::vector<Vec>& sin_coeffs);

/// (u, v) -> ((R + r cos v) cos u, (R + r cos v) sin u, r sin v)
DifferentiableMap torus_patch(double major_radius, double minor_radius);
/// (theta, phi) -> r (sin theta cos phi, sin theta sin phi, cos theta)
DifferentiableMap sphere_patch(double radius);
/// (t^1..t^k) -> (t^1..t^k, h(t)); a graph hypersurface over R^k.
DifferentiableMap graph_surface(const Polynomial& height);
/// (r, theta) -> (r cos theta, r sin theta), with its inverse on r > 0.
DifferentiableMap polar();

/// s -> scale * s + shift, scale != 0, with inverse.
DifferentiableMap affine_reparam(double scale, double shift);
/// s -> s + c sin s, |c| < 1, with a Newton inverse.
DifferentiableMap sine_reparam(double amplitude);

/// iota_{k,m}: R^k -> R^m, t -> (t, 0, ..., 0)
DifferentiableMap inclusion(int k, int m);
/// pr_{m,k}: R^m -> R^k, y -> (y^1..y^k)
DifferentiableMap projection(int m, int k);
/// R^{k-1} -> R^k inserting `value` at 0-based position `axis`.
DifferentiableMap face_inclusion(int k, int axis, double value);

/// x -> f(x) + s g(x); f and g share domain and codomain.
DifferentiableMap sum(const DifferentiableMap& f, const DifferentiableMap& g, double s = 1.0);
/// x -> p(x) v(x) for a scalar-valued p (codomain 1).
DifferentiableMap scaled(const DifferentiableMap& profile, const DifferentiableMap& field);
/// t -> sin(pi j (t - a) / (b - a)); vanishes at both ends of [a, b].
DifferentiableMap sine_bump(double a, double b, int j);

/// Lift of a curve to the tangent bundle chart: t -> (zeta(t), zeta'(t)).
/// The lower Jacobian block (zeta'') uses central differences of the Jacobian.
DifferentiableMap tangent_lift(const DifferentiableMap& curve);

}  // namespace variform::maps
