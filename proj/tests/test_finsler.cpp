#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include <variform/finsler.hpp>
#include <variform/maps.hpp>

#include "support.hpp"

using namespace variform;

namespace {

Vec b_first(int m, double b) {
  Vec v = Vec::Zero(m);
  v[0] = b;
  return v;
}

std::vector<FinslerFunction> homogeneous_catalog() {
  Mat G(3, 3);
  G << 2.0, 0.3, 0.0, 0.3, 1.0, 0.1, 0.0, 0.1, 1.5;
  Vec a(3);
  a << 1.0, 2.0, 0.5;
  return {FinslerFunction::euclidean(3),
          FinslerFunction::riemannian(MetricField::constant(G)),
          FinslerFunction::riemannian(MetricField::conformal(G, 0.4)),
          FinslerFunction::randers(MetricField::constant(Mat::Identity(3, 3)), b_first(3, 0.3)),
          FinslerFunction::randers(MetricField::conformal(G, 0.2), b_first(3, -0.5)),
          FinslerFunction::mth_root(a),
          FinslerFunction::areal_gram(2, 4)};
}

}  // namespace

TEST_CASE("catalog metrics are homogeneous and projectable") {
  const SamplingSpec s;
  for (const auto& F : homogeneous_catalog()) {
    CAPTURE(F.describe());
    CHECK(check_homogeneity(F, s) <= 1e-11);
    CHECK(check_projectability(F, s) <= 1e-11);
    CHECK(check_euler_identity(F, s) <= 1e-11);
    CHECK(check_fiber_gradient(F, s) <= 1e-6);
  }
  CHECK(check_homogeneity(FinslerFunction::euclidean(4), s) <= 1e-15);
  CHECK(check_projectability(FinslerFunction::euclidean(4), s) <= 1e-14);
}

TEST_CASE("the squared norm fails homogeneity") {
  const auto E = FinslerFunction::squared_norm(3);
  SamplingSpec s;
  s.lambdas = {2.0};
  CHECK(check_homogeneity(E, s) == doctest::Approx(1.0));
  CHECK(check_projectability(E, s) >= 0.5);
  CHECK(check_fiber_gradient(E, s) <= 1e-6);
  CHECK_FALSE(E.homogeneous_by_construction());
}

TEST_CASE("analytic gradients") {
  Vec y = Vec::Zero(2), v(2);
  v << 3.0, 4.0;
  CHECK((FinslerFunction::euclidean(2).fiber_gradient(y, v) - v / 5.0).norm() <= 1e-16);
  const auto R = FinslerFunction::randers(MetricField::constant(Mat::Identity(2, 2)), b_first(2, 0.3));
  CHECK(R(y, v) == doctest::Approx(5.0 + 0.9));
  CHECK((R.fiber_gradient(y, v) - (v / 5.0 + b_first(2, 0.3))).norm() <= 1e-15);
  Mat G(2, 2);
  G << 2, 1, 1, 3;
  const auto Rg = FinslerFunction::riemannian(MetricField::constant(G));
  CHECK((Rg.fiber_gradient(y, v) - G * v / std::sqrt(v.dot(G * v))).norm() <= 1e-15);
}

TEST_CASE("Hilbert form coefficients") {
  const auto R = FinslerFunction::randers(MetricField::constant(Mat::Identity(2, 2)), b_first(2, 0.3));
  const KForm eta = hilbert_form(R);
  CHECK(eta.degree() == 1);
  CHECK(eta.dim() == 4);
  Vec z(4);
  z << 1.0, 2.0, 0.0, 2.0;
  Vec expect(4);
  expect << 0.3, 1.0, 0.0, 0.0;
  CHECK((eta.coefficients(z) - expect).norm() <= 1e-15);

  z.tail(2).setZero();
  CHECK(errc_of([&] { eta.coefficients(z); }) == Errc::slit_domain);
  CHECK(errc_of([] { hilbert_form(FinslerFunction::areal_gram(2, 3)); }) == Errc::unsupported_degree);
}

TEST_CASE("pullback identity along curves") {
  std::vector<double> ts;
  for (int i = 0; i < 40; ++i) ts.push_back(0.17 * i);
  const auto circle = maps::circle(1.0, Vec::Zero(2));
  CHECK(pullback_identity_residual(FinslerFunction::euclidean(2), circle, ts) <= 1e-13);
  const auto R = FinslerFunction::randers(MetricField::constant(Mat::Identity(3, 3)), b_first(3, 0.4));
  CHECK(pullback_identity_residual(R, maps::helix(1.0, 0.5), ts) <= 1e-11);

  const auto E = FinslerFunction::squared_norm(2);
  CHECK(pullback_identity_residual(E, circle, ts) == doctest::Approx(1.0));

  Vec p = Vec::Zero(2);
  CHECK(errc_of([&] { pullback_identity_residual(FinslerFunction::euclidean(2), maps::segment(p, p), ts); }) ==
        Errc::immersion_failure);
}

TEST_CASE("constructor validation") {
  CHECK(errc_of([] {
          FinslerFunction::randers(MetricField::constant(Mat::Identity(2, 2)), b_first(2, 1.0));
        }) == Errc::invalid_argument);
  Mat bad(2, 2);
  bad << 1, 2, 2, 1;
  CHECK(errc_of([&] { MetricField::constant(bad); }) == Errc::invalid_argument);
  CHECK(errc_of([] { FinslerFunction::mth_root(Vec::Ones(2), 3); }) == Errc::invalid_argument);
  CHECK(errc_of([] { FinslerFunction::mth_root(-Vec::Ones(2)); }) == Errc::invalid_argument);
  CHECK(metric_kind_from_string("randers") == MetricKind::randers);
  CHECK_FALSE(metric_kind_from_string("kropina").has_value());
}

TEST_CASE("positivity on nonzero fibers") {
  for (const auto& F : homogeneous_catalog()) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n;
    for (int i = 0; i < 50; ++i) {
      Vec y(F.dim()), v(F.fiber_dim());
      for (auto& x : y) x = n(rng);
      for (auto& x : v) x = n(rng);
      CHECK(F(y, v) > 0.0);
    }
  }
}
