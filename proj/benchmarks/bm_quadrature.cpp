#include <benchmark/benchmark.h>

#include <cmath>

#include <variform/forms.hpp>
#include <variform/maps.hpp>
#include <variform/quadrature.hpp>

namespace bm = benchmark;
using namespace variform;

static void BM_IntegrateBox2D(bm::State& st) {
  QuadratureSpec q;
  q.cells_per_axis = static_cast<int>(st.range(0));
  const Box box = Box::unit(2);
  for (auto _ : st) {
    double v = integrate_box(box, q, [](const Vec& t) { return std::exp(t[0]) * std::cos(t[1]); });
    bm::DoNotOptimize(v);
  }
  st.counters["nodes"] = static_cast<double>(q.cells_per_axis * q.cells_per_axis * q.gauss_order * q.gauss_order);
}
BENCHMARK(BM_IntegrateBox2D)->Arg(8)->Arg(16)->Arg(32)->Unit(bm::kMicrosecond);

// 2-form x dy ^ dz pulled back through a torus patch
static void BM_IntegrateTorusForm(bm::State& st) {
  const KForm eta = KForm::from_terms(2, 3, {{MultiIndex({2, 3}, 3), Polynomial::coordinate(3, 0)}});
  Vec lo(2), hi(2);
  lo << 0.0, 0.0;
  hi << 6.283185307179586, 6.283185307179586;
  const Piece torus(Box(lo, hi), maps::torus_patch(2.0, 0.5));
  const QuadratureSpec q;
  for (auto _ : st) {
    double v = integrate(eta, torus, q);
    bm::DoNotOptimize(v);
  }
}
BENCHMARK(BM_IntegrateTorusForm)->Unit(bm::kMillisecond);

static void BM_StokesCube(bm::State& st) {
  Polynomial p(3, {{1.0, {2, 1, 0}}, {0.5, {0, 0, 3}}});
  const KForm w = KForm::from_terms(2, 3, {{MultiIndex({1, 2}, 3), p}});
  const Piece cube(Box::unit(3), maps::identity(3));
  QuadratureSpec q;
  q.cells_per_axis = 8;
  for (auto _ : st) {
    IdentityCheck c = verify_stokes(w, cube, q);
    bm::DoNotOptimize(c.residual);
  }
}
BENCHMARK(BM_StokesCube)->Unit(bm::kMillisecond);
