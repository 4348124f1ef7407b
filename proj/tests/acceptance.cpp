// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Reference values come from closed forms or from the
// brute-force oracles in oracles.hpp, never from the code under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <variform/error.hpp>
#include <variform/finsler.hpp>
#include <variform/forms.hpp>
#include <variform/functional.hpp>
#include <variform/grassmann.hpp>
#include <variform/kvector.hpp>
#include <variform/maps.hpp>

#include "oracles.hpp"

using namespace variform;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

// "worst 3.1e-16 <= 1e-12"
Outcome at_most(double worst, double bound) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "worst %.3g <= %.3g", worst, bound);
  return {worst <= bound, buf};
}

Vec vec(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

Vec uniform_vector(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = u(rng);
  return v;
}

// A random matrix with positive determinant, kept away from singularity.
Mat positive_matrix(std::mt19937_64& rng, int n) {
  Mat A = Mat::Identity(n, n) + 0.3 * oracle::random_matrix(rng, n, n);
  if (A.determinant() < 0) A.col(0) *= -1.0;
  return A;
}

// ---------------------------------------------------------------- 1..6

Outcome lift_oracle() {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> dim(1, 5);
  double worst = 0.0;
  int done = 0;
  while (done < 100) {
    const int k = 1 + done % 3;
    const int n = dim(rng), m = dim(rng);
    if (k > n || k > m) continue;
    const Mat J = oracle::random_matrix(rng, m, n);
    const Vec comps = oracle::random_vector(rng, static_cast<int>(binomial(n, k)));
    const KVector xi(oracle::random_vector(rng, n), k, comps);
    const Vec lifted = lift_kvector(maps::linear(J), xi.base(), xi).comps();
    const Vec ref = oracle::lift_full_sum(J, comps, k);
    worst = std::max(worst, (lifted - ref).cwiseAbs().maxCoeff() / std::max(1.0, ref.cwiseAbs().maxCoeff()));
    ++done;
  }
  return at_most(worst, 1e-12);
}

Outcome cauchy_binet() {
  std::mt19937_64 rng(2);
  // (f: R^2 -> R^m, g: R^m -> R^p) pairs from the catalog
  Polynomial p0(3, {{1.0, {1, 0, 0}}, {0.5, {0, 2, 0}}}), p1(3, {{1.0, {0, 1, 1}}, {-0.3, {2, 0, 0}}}),
      p2(3, {{1.0, {0, 0, 1}}, {0.2, {1, 1, 0}}}), p3(3, {{1.0, {1, 1, 1}}});
  const auto cubic = maps::polynomial({p0, p1, p2, p3});
  const std::vector<std::pair<DifferentiableMap, DifferentiableMap>> pairs{
      {maps::torus_patch(2.0, 0.5), cubic},
      {maps::sphere_patch(1.5), maps::linear(oracle::random_matrix(rng, 4, 3))},
      {maps::polar(), maps::graph_surface(Polynomial(2, {{1.0, {2, 0}}, {-1.0, {0, 2}}}))},
      {maps::polar(), maps::torus_patch(3.0, 1.0)},
  };
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto& [f, g] = pairs[static_cast<std::size_t>(i) % pairs.size()];
    const Vec x = uniform_vector(rng, f.domain_dim(), 0.2, 1.2);
    const int k = 1 + i % 2;
    const KVector xi(x, k, oracle::random_vector(rng, static_cast<int>(binomial(f.domain_dim(), k))));
    const KVector whole = lift_kvector(compose(g, f), x, xi);
    const KVector staged = lift_kvector(g, f(x), lift_kvector(f, x, xi));
    worst = std::max(worst, (whole.comps() - staged.comps()).cwiseAbs().maxCoeff() /
                                std::max(1.0, staged.max_abs()));
  }
  return at_most(worst, 1e-10);
}

// Adapted charts related by ybar = A y with A block upper triangular, so
// that S = {y^{k+1} = ... = y^m = 0} is preserved.
Mat adapted_change(std::mt19937_64& rng, int k, int m) {
  Mat A = positive_matrix(rng, m);
  A.bottomLeftCorner(m - k, k).setZero();
  while (A.topLeftCorner(k, k).determinant() <= 0.1 || A.determinant() <= 0.1) {
    A = positive_matrix(rng, m);
    A.bottomLeftCorner(m - k, k).setZero();
  }
  return A;
}

Outcome sections_scale() {
  std::mt19937_64 rng(3);
  double worst = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + trial % 3, k = 1 + trial % (m - 1);
    const Mat A = adapted_change(rng, k, m);
    Vec y = Vec::Zero(m);
    y.head(k) = uniform_vector(rng, k, -1, 1);
    const Vec ybar = A * y;
    // the barred section pushed into the unbarred chart
    const KVector bar = canonical_section_along_S(AdaptedChart{k, m}, ybar);
    const KVector pushed = lift_kvector(maps::linear(A.inverse()), ybar, bar);
    const double det = A.inverse().topLeftCorner(k, k).determinant();  // det(dy^i / dybar^j)
    const KVector expect = canonical_section_along_S(AdaptedChart{k, m}, y) * det;
    worst = std::max(worst, (pushed.comps() - expect.comps()).cwiseAbs().maxCoeff());
  }
  return at_most(worst, 1e-10);
}

Outcome section_pullbacks() {
  // Nonlinear adapted change on R^3, k = 2, preserving {y3 = 0}:
  //   ybar1 = y1 + 0.3 y2^2 + y3, ybar2 = y2 + 0.2 y1 y2 - y3, ybar3 = y3 (1 + y1^2)
  const Polynomial b1(3, {{1.0, {1, 0, 0}}, {0.3, {0, 2, 0}}, {1.0, {0, 0, 1}}});
  const Polynomial b2(3, {{1.0, {0, 1, 0}}, {0.2, {1, 1, 0}}, {-1.0, {0, 0, 1}}});
  const Polynomial b3(3, {{1.0, {0, 0, 1}}, {1.0, {2, 0, 1}}});
  const auto change = maps::polynomial({b1, b2, b3});
  const auto on_S = maps::inclusion(2, 3);
  const KForm top = KForm::from_terms(2, 3, {{MultiIndex({1, 2}, 3), Polynomial::constant(3, 1.0)}});
  const KForm bar_side = pullback(top, compose(change, on_S));
  const KForm plain_side = pullback(top, on_S);
  std::mt19937_64 rng(4);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Vec u = uniform_vector(rng, 2, -1, 1);
    // det(dybar^i / dy^j), i, j <= 2, on S by hand
    const double det = 1.0 * (1.0 + 0.2 * u[0]) - 0.6 * u[1] * 0.2 * u[1];
    worst = std::max(worst, std::abs(bar_side.coefficients(u)[0] - det * plain_side.coefficients(u)[0]));
  }
  return at_most(worst, 1e-10);
}

Outcome grassmann_rays() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  double scale_worst = 0.0, round_worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const int m = 3 + i % 3, k = 1 + i % (m - 1);
    const KVector xi(uniform_vector(rng, m, -1, 1), k, oracle::random_vector(rng, static_cast<int>(binomial(m, k))));
    const GrassmannPoint p = to_grassmann(xi);
    const GrassmannPoint q = to_grassmann(xi * scale(rng));
    if (!(p.pivot == q.pivot) || p.pivot_sign != q.pivot_sign) {
      scale_worst = std::numeric_limits<double>::infinity();
      continue;
    }
    scale_worst = std::max(scale_worst, (p.w - q.w).cwiseAbs().maxCoeff());
    // round trip through every chart the ray lies in
    for (const MultiIndex& nu : enumerate(k, m)) {
      if (std::abs(p.w[static_cast<Eigen::Index>(rank(nu))]) < 1e-3) continue;
      const GrassmannPoint back = grassmann_transition(grassmann_transition(p, nu), p.pivot);
      round_worst = std::max(round_worst, (back.w - p.w).cwiseAbs().maxCoeff());
    }
  }
  // positive scaling: a few ulps from the pivot division
  const bool ok = scale_worst <= 4 * std::numeric_limits<double>::epsilon() && round_worst <= 1e-13;
  char buf[128];
  std::snprintf(buf, sizeof buf, "scaling %.3g <= 4 ulp, round trip %.3g <= 1e-13", scale_worst, round_worst);
  return {ok, buf};
}

Outcome grassmann_reparam() {
  std::mt19937_64 rng(6);
  const std::vector<DifferentiableMap> surfaces{maps::torus_patch(2.0, 0.5), maps::sphere_patch(1.0),
                                                maps::graph_surface(Polynomial(2, {{1.0, {2, 0}}, {1.0, {0, 2}}}))};
  double worst = 0.0;
  for (int i = 0; i < 60; ++i) {
    const auto& f = surfaces[static_cast<std::size_t>(i) % surfaces.size()];
    // positive-determinant reparametrizations: affine, and polar on r > 0
    const Vec s = uniform_vector(rng, 2, 0.5, 1.2);
    DifferentiableMap phi = maps::polar();
    if (i % 2 == 0) phi = maps::affine(positive_matrix(rng, 2), uniform_vector(rng, 2, -0.2, 0.2));
    const GrassmannPoint a = grassmann_canonical_lift(compose(f, phi), s);
    const GrassmannPoint b = grassmann_canonical_lift(f, phi(s));
    worst = std::max(worst, grassmann_distance(b, a));
  }
  return at_most(worst, 1e-9);
}

// ---------------------------------------------------------------- 7..9

Outcome domain_transform() {
  const QuadratureSpec q;
  const Piece square(Box::unit(2), maps::identity(2));
  const KForm poly = KForm::from_terms(
      2, 2, {{MultiIndex({1, 2}, 2), Polynomial(2, {{1.0, {1, 1}}, {2.0, {3, 0}}, {-0.5, {0, 0}}})}});
  double poly_worst = 0.0;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const auto alpha = maps::affine(positive_matrix(rng, 2), uniform_vector(rng, 2, -1, 1));
    poly_worst = std::max(poly_worst, verify_domain_transform(poly, alpha, square, q).residual);
  }
  // trigonometric: polar coordinates on an annular sector, and a polar
  // change of variables on a sheared square
  const KForm mixed = KForm::from_terms(
      2, 2, {{MultiIndex({1, 2}, 2), Polynomial(2, {{1.0, {2, 0}}, {1.0, {0, 1}}, {1.0, {0, 0}}})}});
  Mat shear(2, 2);
  shear << 1.0, 0.3, 0.0, 1.0;
  const Piece sector(Box(vec({0.5, 0.0}), vec({1.5, 1.0})), maps::polar());
  const Piece sheared(Box::unit(2), maps::affine(shear, vec({1.0, 0.5})));
  const double trig_worst = std::max(verify_domain_transform(mixed, maps::polar(), sector, q).residual,
                                     verify_domain_transform(mixed, maps::polar(), sheared, q).residual);
  char buf[128];
  std::snprintf(buf, sizeof buf, "affine %.3g <= 1e-10, trigonometric %.3g <= 1e-8", poly_worst, trig_worst);
  return {poly_worst <= 1e-10 && trig_worst <= 1e-8, buf};
}

Outcome leibniz() {
  const Piece square(Box::unit(2), maps::identity(2));
  const KForm eta = KForm::from_terms(2, 2, {{MultiIndex({1, 2}, 2), Polynomial::constant(2, 1.0)}});
  double worst = 0.0;
  for (double t0 : {0.0, 0.7, 2.0}) {
    const IdentityCheck c = verify_leibniz(scaled_family(eta, FamilyProfile::sine), square, t0, 1e-4, {});
    worst = std::max({worst, c.residual, std::abs(c.lhs - std::cos(t0))});
  }
  return at_most(worst, 1e-7);
}

Outcome stokes() {
  const QuadratureSpec q;
  const Piece square(Box::unit(2), maps::identity(2));
  const Piece cube(Box::unit(3), maps::identity(3));
  double poly = 0.0;
  poly = std::max(poly, verify_stokes(KForm::from_terms(1, 2, {{MultiIndex({1}, 2), Polynomial(2, {{1.0, {2, 3}}})},
                                                             {MultiIndex({2}, 2), Polynomial(2, {{-2.0, {1, 0}}, {1.0, {4, 1}}})}}),
                                      square, q).residual);
  poly = std::max(poly, verify_stokes(KForm::from_terms(2, 3, {{MultiIndex({1, 2}, 3), Polynomial(3, {{1.0, {2, 1, 3}}})},
                                                             {MultiIndex({1, 3}, 3), Polynomial(3, {{0.5, {0, 2, 0}}})},
                                                             {MultiIndex({2, 3}, 3), Polynomial(3, {{3.0, {1, 0, 0}}})}}),
                                      cube, q).residual);
  // coefficients without analytic partials go through central differences
  const KForm fd(1, 2, [](const Vec& y) { return vec({std::sin(y[1]) * y[0], std::exp(y[0] * y[1])}); });
  const double fd_res = verify_stokes(fd, square, q).residual;
  char buf[128];
  std::snprintf(buf, sizeof buf, "polynomial %.3g <= 1e-10, finite-difference %.3g <= 1e-6", poly, fd_res);
  return {poly <= 1e-10 && fd_res <= 1e-6, buf};
}

// ---------------------------------------------------------------- 10..11

std::vector<FinslerFunction> homogeneous_catalog() {
  Mat g(3, 3);
  g << 2.0, 0.3, 0.0, 0.3, 1.0, 0.1, 0.0, 0.1, 1.5;
  return {FinslerFunction::euclidean(3),
          FinslerFunction::riemannian(MetricField::constant(g)),
          FinslerFunction::riemannian(MetricField::conformal(g, 0.5)),
          FinslerFunction::randers(MetricField::constant(Mat::Identity(3, 3)), vec({0.3, 0.0, 0.0})),
          FinslerFunction::randers(MetricField::conformal(g, 0.2), vec({0.2, -0.4, 0.1})),
          FinslerFunction::mth_root(vec({1.0, 2.0, 0.5})),
          FinslerFunction::areal_gram(2, 4)};
}

Outcome homogeneity() {
  SamplingSpec s;  // 100 samples, lambdas {0.5, 2, 10}
  double worst = 0.0;
  for (const auto& F : homogeneous_catalog()) {
    worst = std::max({worst, check_homogeneity(F, s), check_projectability(F, s)});
  }
  SamplingSpec two = s;
  two.lambdas = {2.0};
  const double negative = check_homogeneity(FinslerFunction::squared_norm(3), two);
  char buf[128];
  std::snprintf(buf, sizeof buf, "catalog %.3g <= 1e-11, squared norm %.3g >= 0.5", worst, negative);
  return {worst <= 1e-11 && negative >= 0.5, buf};
}

Outcome hilbert_pullback() {
  std::mt19937_64 rng(11);
  Mat g(2, 2);
  g << 1.5, 0.2, 0.2, 0.8;
  const std::vector<FinslerFunction> metrics{
      FinslerFunction::euclidean(2), FinslerFunction::riemannian(MetricField::conformal(g, 0.3)),
      FinslerFunction::randers(MetricField::constant(g), vec({0.3, -0.2}))};
  std::vector<double> ts;
  for (int i = 0; i <= 50; ++i) ts.push_back(i / 50.0);
  double euler = 0.0, dual = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    // random closed-ish Fourier curve with a dominant circle so it stays immersed
    std::vector<Vec> cs{vec({1.0, 0.0}) + 0.1 * oracle::random_vector(rng, 2), 0.1 * oracle::random_vector(rng, 2)};
    std::vector<Vec> sn{vec({0.0, 1.0}) + 0.1 * oracle::random_vector(rng, 2), 0.1 * oracle::random_vector(rng, 2)};
    const auto curve = maps::fourier_curve(oracle::random_vector(rng, 2), cs, sn);
    for (const auto& F : metrics) {
      euler = std::max(euler, pullback_identity_residual(F, curve, ts));
      dual = std::max(dual, curve_length(F, curve, 0.0, 1.0).cross_check);
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "Euler identity %.3g <= 1e-11, dual route %.3g <= 1e-10", euler, dual);
  return {euler <= 1e-11 && dual <= 1e-10, buf};
}

// ---------------------------------------------------------------- 12..16

Outcome lengths() {
  QuadratureSpec q;
  q.cells_per_axis = 64;
  const double circle = curve_length(FinslerFunction::euclidean(2), maps::circle(1.0, vec({0, 0})), 0, 2 * pi, q).value;
  const Vec p = vec({0.5, -1.0, 2.0}), qq = vec({2.0, 3.0, 1.0}), b = vec({0.3, -0.2, 0.4});
  const auto F = FinslerFunction::randers(MetricField::constant(Mat::Identity(3, 3)), b);
  const double seg = curve_length(F, maps::segment(p, qq), 0, 1).value;
  const double circle_err = std::abs(circle - 2 * pi);
  const double seg_err = std::abs(seg - ((qq - p).norm() + b.dot(qq - p)));
  char buf[128];
  std::snprintf(buf, sizeof buf, "circle %.3g <= 1e-8, Randers segment %.3g <= 1e-12", circle_err, seg_err);
  return {circle_err <= 1e-8 && seg_err <= 1e-12, buf};
}

Outcome areas() {
  const QuadratureSpec q;
  const auto L = FinslerFunction::areal_gram(2, 3);
  Mat A = Mat::Zero(3, 2);
  A(0, 0) = 1.0;
  A(1, 1) = 1.0;
  const double flat = std::abs(areal_value(L, Piece(Box(vec({0, 0}), vec({2.0, 3.0})), maps::linear(A)), q).value - 6.0);
  const double zone = std::abs(areal_value(L, Piece(Box(vec({0.1, 0}), vec({pi - 0.1, 2 * pi})), maps::sphere_patch(1.0)), q).value -
                               2 * pi * (std::cos(0.1) - std::cos(pi - 0.1)));
  const auto graph = maps::graph_surface(Polynomial(2, {{1.0, {2, 0}}, {1.0, {0, 2}}}));
  const double ref = oracle::simpson_2d(
      [&](double u, double v) { return oracle::gram_density(graph.jacobian(vec({u, v}))); }, 0, 1, 0, 1, 400);
  const double graph_err = std::abs(areal_value(L, Piece(Box::unit(2), graph), q).value - ref);
  char buf[160];
  std::snprintf(buf, sizeof buf, "rectangle %.3g <= 1e-12, zone %.3g <= 1e-8, graph %.3g <= 1e-8", flat, zone, graph_err);
  return {flat <= 1e-12 && zone <= 1e-8 && graph_err <= 1e-8, buf};
}

Outcome reparam() {
  const IdentityCheck c = reparam_invariance_residual(FinslerFunction::euclidean(2), maps::circle(1.0, vec({0, 0})), 0,
                                                      2 * pi, maps::sine_reparam(0.3), {});
  return at_most(std::max(c.residual, std::abs(c.rhs - 2 * pi)), 1e-8);
}

Outcome extremality() {
  const auto line = maps::segment(vec({-1.0, 0.5}), vec({2.0, 1.0}));
  const double euclid = extremal_residual(FinslerFunction::euclidean(2), line, 0, 1).residual;
  const double randers =
      extremal_residual(FinslerFunction::randers(MetricField::constant(Mat::Identity(2, 2)), vec({0.4, -0.3})), line, 0, 1)
          .residual;
  const double arc = extremal_residual(FinslerFunction::euclidean(2), maps::circle(1.0, vec({0, 0})), 0, pi / 2).residual;
  char buf[160];
  std::snprintf(buf, sizeof buf, "line %.3g, Randers line %.3g <= 1e-6, arc %.3g >= 1e-3", euclid, randers, arc);
  return {euclid <= 1e-6 && randers <= 1e-6 && arc >= 1e-3, buf};
}

Outcome partition_independence() {
  const QuadratureSpec q;
  const Piece square(Box::unit(2), maps::identity(2));
  // non-polynomial coefficient, so no quadrature rule is exact
  const KForm eta(2, 2, [](const Vec& y) { return vec({std::exp(y[0]) * std::cos(2 * y[1]) + y[0] * y[1]}); });
  const auto box = [](double a, double b, double c, double d) { return Box(vec({a, c}), vec({b, d})); };
  const auto two = PartitionOfUnity::mollified(square.param_box, {box(0, 0.6, 0, 1), box(0.4, 1, 0, 1)});
  const auto three = PartitionOfUnity::mollified(
      square.param_box, {box(0, 1, 0, 0.7), box(0, 0.55, 0.2, 1), box(0.45, 1, 0.2, 1)});
  const double whole = integrate(eta, square, q);
  const double a = integrate_with_partition(eta, square, two, q);
  const double b = integrate_with_partition(eta, square, three, q);
  return at_most(std::max({std::abs(a - b), std::abs(a - whole), std::abs(b - whole)}), 1e-8);
}

// ---------------------------------------------------------------- 17

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("variform_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  bool ok = true;
  std::string detail;
  for (const char* name : {"check_metrics.json", "check_forms.json", "length_circle.json"}) {
    const std::string scenario = std::string(VARIFORM_SCENARIO_DIR) + "/" + name;
    const std::string sub = std::string(name).rfind("length", 0) == 0 ? "length" : "check";
    std::string runs[2];
    for (int i = 0; i < 2; ++i) {
      const fs::path csv = dir / ("run" + std::to_string(i) + ".csv");
      const std::string cmd = std::string("\"") + VARIFORM_CLI + "\" " + sub + " --scenario \"" + scenario +
                              "\" --seed 7 --quiet --csv \"" + csv.string() + "\"";
      const int rc = std::system(cmd.c_str());
      if (rc != 0) ok = false;
      runs[i] = slurp(csv);
    }
    if (runs[0].empty() || runs[0] != runs[1]) ok = false;
    detail += std::string(detail.empty() ? "" : ", ") + name + (runs[0] == runs[1] && !runs[0].empty() ? " identical" : " DIFFER");
  }
  fs::remove_all(dir);
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"lift matches the full tuple-sum formula", lift_oracle},
      {"Cauchy-Binet functoriality of lifts", cauchy_binet},
      {"canonical sections scale by the Jacobian determinant", sections_scale},
      {"pullbacks of dy^1..dy^k under canonical sections", section_pullbacks},
      {"Grassmann ray invariance and chart transitions", grassmann_rays},
      {"Grassmann lifts under positive reparametrizations", grassmann_reparam},
      {"transformation of the integration domain", domain_transform},
      {"Leibniz rule", leibniz},
      {"Stokes formula", stokes},
      {"homogeneity and projectability", homogeneity},
      {"Hilbert form pullback identity", hilbert_pullback},
      {"length values", lengths},
      {"areal values", areas},
      {"reparametrization invariance", reparam},
      {"extremality", extremality},
      {"partition of unity independence", partition_independence},
      {"CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
