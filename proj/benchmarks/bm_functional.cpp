#include <benchmark/benchmark.h>

#include <variform/functional.hpp>
#include <variform/maps.hpp>

namespace bm = benchmark;
using namespace variform;

namespace {

constexpr double two_pi = 6.283185307179586;

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

}  // namespace

// direct quadrature only
static void BM_LengthValueCircle(bm::State& st) {
  QuadratureSpec q;
  q.cells_per_axis = static_cast<int>(st.range(0));
  const auto F = FinslerFunction::euclidean(2);
  const auto circle = maps::circle(1.0, v2(0, 0));
  for (auto _ : st) {
    double L = curve_length_value(F, circle, 0.0, two_pi, q);
    bm::DoNotOptimize(L);
  }
}
BENCHMARK(BM_LengthValueCircle)->Arg(16)->Arg(64)->Unit(bm::kMicrosecond);

// both routes plus the homogeneity probe
static void BM_CurveLengthRanders(bm::State& st) {
  const auto F = FinslerFunction::randers(MetricField::conformal(Mat::Identity(2, 2), 0.2), v2(0.3, -0.2));
  const auto circle = maps::circle(1.0, v2(0, 0));
  for (auto _ : st) {
    LengthResult r = curve_length(F, circle, 0.0, two_pi);
    bm::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_CurveLengthRanders)->Unit(bm::kMicrosecond);

static void BM_ExtremalResidualLine(bm::State& st) {
  const auto F = FinslerFunction::euclidean(2);
  const auto line = maps::segment(v2(-1, 0.5), v2(2, 1));
  for (auto _ : st) {
    ExtremalResult r = extremal_residual(F, line, 0.0, 1.0);
    bm::DoNotOptimize(r.residual);
  }
}
BENCHMARK(BM_ExtremalResidualLine)->Unit(bm::kMillisecond);
