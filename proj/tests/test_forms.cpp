#include <doctest.h>

#include <cmath>
#include <numbers>

#include <variform/forms.hpp>
#include <variform/maps.hpp>

#include "support.hpp"

using namespace variform;

namespace {

Polynomial y(int m, int i) { return Polynomial::coordinate(m, i); }
Polynomial one(int m) { return Polynomial::constant(m, 1.0); }

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Piece unit_square() { return Piece(Box::unit(2), maps::identity(2)); }

Piece unit_circle() {
  return Piece(Box::interval(0, 2 * std::numbers::pi), maps::circle(1.0, Vec::Zero(2)));
}

}  // namespace

TEST_CASE("pullback by minors") {
  const KForm area = KForm::from_terms(2, 3, {{MultiIndex({1, 2}, 3), one(3)}});
  Mat A = Mat::Zero(3, 2);
  A(0, 0) = 2.0;
  A(1, 1) = 3.0;
  const KForm p = pullback(area, maps::linear(A));
  CHECK(p.degree() == 2);
  CHECK(p.coefficients(vec2(0.3, 0.1))[0] == doctest::Approx(6.0));

  const KForm eta = KForm::from_terms(1, 2, {{MultiIndex({2}, 2), y(2, 0)}});
  const KForm same = pullback(eta, maps::identity(2));
  CHECK((same.coefficients(vec2(0.7, 2)) - eta.coefficients(vec2(0.7, 2))).norm() == 0.0);

  CHECK(errc_of([&] { pullback(area, maps::circle(1.0, Vec::Zero(2))); }) ==
        Errc::dimension_mismatch);
  const KForm area2 = KForm::from_terms(2, 2, {{MultiIndex({1, 2}, 2), one(2)}});
  CHECK(errc_of([&] { pullback(area2, maps::circle(1.0, Vec::Zero(2))); }) == Errc::invalid_degree);
}

TEST_CASE("integrals over pieces") {
  const QuadratureSpec q;
  const KForm area = KForm::from_terms(2, 2, {{MultiIndex({1, 2}, 2), one(2)}});
  CHECK(integrate(area, unit_square(), q) == doctest::Approx(1.0).epsilon(1e-15));

  const KForm eta = KForm::from_terms(1, 2, {{MultiIndex({2}, 2), y(2, 0)}});
  const double v = integrate(eta, unit_circle(), q);
  CHECK(v == doctest::Approx(std::numbers::pi).epsilon(1e-13));

  Piece rev = unit_circle();
  rev.orientation = -1;
  CHECK(integrate(eta, rev, q) == -v);
}

TEST_CASE("degenerate nodes are counted, not fatal") {
  // a collapsed map is degenerate at every node
  Mat A = Mat::Zero(2, 2);
  A(0, 0) = 1.0;
  const Piece flat(Box::unit(2), maps::linear(A));
  IntegrationDiagnostics diag;
  const KForm area = KForm::from_terms(2, 2, {{MultiIndex({1, 2}, 2), one(2)}});
  QuadratureSpec q;
  q.cells_per_axis = 2;
  CHECK(integrate(area, flat, q, &diag) == 0.0);
  CHECK(diag.degenerate_nodes == 4 * 64);
  CHECK(diag.warnings.size() == 1);
  CHECK(flat.count_degenerate(4) == 16);
}

TEST_CASE("partitions of unity") {
  const QuadratureSpec q;
  const Piece seg(Box::interval(0, 1), maps::identity(1));
  const KForm dt = KForm::from_terms(1, 1, {{MultiIndex({1}, 1), one(1)}});
  const auto two = PartitionOfUnity::mollified(seg.param_box, {Box::interval(0, 0.6), Box::interval(0.4, 1)});
  CHECK(std::abs(integrate_with_partition(dt, seg, two, q) - 1.0) <= 1e-10);
  for (double t : {0.0, 0.3, 0.45, 0.5, 0.55, 1.0}) {
    Vec x(1);
    x << t;
    CHECK(two.sum(x) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(two(0, x) >= 0.0);
  }

  const KForm eta = KForm::from_terms(1, 2, {{MultiIndex({2}, 2), y(2, 0)}});
  const double tp = 2 * std::numbers::pi;
  const auto three = PartitionOfUnity::mollified(
      Box::interval(0, tp), {Box::interval(0, 2.5), Box::interval(2.0, 4.5), Box::interval(4.0, tp)});
  CHECK(std::abs(integrate_with_partition(eta, unit_circle(), three, q) - std::numbers::pi) <= 1e-8);

  const auto bad = PartitionOfUnity::from_functions(
      {[](const Vec&) { return 0.5; }, [](const Vec&) { return 0.4; }},
      {Box::interval(0, 1), Box::interval(0, 1)});
  CHECK(errc_of([&] { integrate_with_partition(dt, seg, bad, q); }) == Errc::invalid_partition);
  CHECK(errc_of([&] {
          PartitionOfUnity::mollified(seg.param_box, {Box::interval(0, 0.3), Box::interval(0.5, 1)});
        }) == Errc::invalid_partition);
}

TEST_CASE("exterior derivative") {
  const KForm eta = KForm::from_terms(1, 2, {{MultiIndex({2}, 2), y(2, 0)}});
  CHECK(exterior_derivative(eta).coefficients(vec2(0.3, 0.4))[0] == 1.0);

  const KForm closed = KForm::from_terms(1, 2, {{MultiIndex({1}, 2), y(2, 0)}});
  CHECK(exterior_derivative(closed).coefficients(vec2(0.3, 0.4))[0] == 0.0);

  Vec p(3);
  p << 0.2, 0.5, -1;
  const KForm w = KForm::from_terms(2, 3, {{MultiIndex({1, 3}, 3), y(3, 1)}});
  CHECK(exterior_derivative(w).coefficients(p)[0] == -1.0);

  // d^2 = 0, analytic and finite-difference
  Polynomial cubic(3, {{1.0, {1, 2, 0}}, {-2.0, {0, 1, 3}}});
  const KForm g = KForm::from_terms(1, 3, {{MultiIndex({1}, 3), cubic}, {MultiIndex({3}, 3), y(3, 0) * 4.0}});
  CHECK(exterior_derivative(exterior_derivative(g)).coefficients(p).cwiseAbs().maxCoeff() <= 1e-12);
  const KForm g_fd(1, 3, [g](const Vec& x) { return g.coefficients(x); });
  CHECK(exterior_derivative(exterior_derivative(g_fd)).coefficients(p).cwiseAbs().maxCoeff() <= 1e-6);

  CHECK(errc_of([] { exterior_derivative(KForm::zero(2, 2)); }) == Errc::invalid_degree);
}

TEST_CASE("boundary faces carry induced orientations") {
  const auto faces = boundary_faces(unit_square());
  REQUIRE(faces.size() == 4);
  const auto ends = boundary_faces(Piece(Box::interval(1, 3), maps::identity(1)));
  REQUIRE(ends.size() == 2);
  int plus = 0, minus = 0;
  for (const auto& e : ends) {
    const double x = e.map(Vec(0))[0];
    if (x == 3.0) plus = e.orientation;
    if (x == 1.0) minus = e.orientation;
  }
  CHECK(plus == 1);
  CHECK(minus == -1);
}

TEST_CASE("Stokes on polynomial forms") {
  const QuadratureSpec q;
  const KForm eta = KForm::from_terms(1, 2, {{MultiIndex({2}, 2), y(2, 0)}});
  const IdentityCheck c = verify_stokes(eta, unit_square(), q);
  CHECK(c.lhs == doctest::Approx(1.0));
  CHECK(c.residual <= 1e-10);

  CHECK(verify_stokes(KForm::zero(1, 2), unit_square(), q).residual == 0.0);

  Polynomial p(3, {{1.0, {2, 1, 0}}, {0.5, {0, 0, 3}}});
  const KForm w = KForm::from_terms(2, 3, {{MultiIndex({1, 2}, 3), p}, {MultiIndex({2, 3}, 3), y(3, 2) * 3.0}});
  CHECK(verify_stokes(w, Piece(Box::unit(3), maps::identity(3)), q).residual <= 1e-10);
}

TEST_CASE("domain transformation") {
  const QuadratureSpec q;
  const KForm area = KForm::from_terms(2, 2, {{MultiIndex({1, 2}, 2), Polynomial(2, {{1.0, {1, 1}}})}});
  Mat S(2, 2);
  S << 2.0, 0.0, 0.0, 0.5;
  CHECK(verify_domain_transform(area, maps::linear(S), unit_square(), q).residual <= 1e-10);
  CHECK(verify_domain_transform(area, maps::identity(2), unit_square(), q).residual == 0.0);
  Mat R(2, 2);
  R << 0, 1, 1, 0;
  CHECK(errc_of([&] { verify_domain_transform(area, maps::linear(R), unit_square(), q); }) ==
        Errc::orientation_violation);
}

TEST_CASE("Leibniz rule") {
  const QuadratureSpec q;
  const KForm area = KForm::from_terms(2, 2, {{MultiIndex({1, 2}, 2), one(2)}});
  const IdentityCheck s = verify_leibniz(scaled_family(area, FamilyProfile::sine), unit_square(), 0.7, 1e-4, q);
  CHECK(s.rhs == doctest::Approx(std::cos(0.7)));
  CHECK(s.residual <= 1e-7);
  CHECK(verify_leibniz(scaled_family(area, FamilyProfile::linear), unit_square(), 0.7, 1e-4, q).residual <= 1e-9);
  CHECK(verify_leibniz(scaled_family(area, FamilyProfile::constant), unit_square(), 0.7, 1e-4, q).residual == 0.0);
}
