#include <benchmark/benchmark.h>

#include <random>

#include <variform/grassmann.hpp>
#include <variform/kvector.hpp>
#include <variform/maps.hpp>

namespace bm = benchmark;
using namespace variform;

namespace {

Mat random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  Mat A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = n(rng);
  return A;
}

}  // namespace

// range(0) = k, range(1) = n = m
static void BM_CompoundMatrix(bm::State& st) {
  const int k = static_cast<int>(st.range(0));
  const int n = static_cast<int>(st.range(1));
  const Mat A = random_matrix(n, n, 1);
  for (auto _ : st) {
    Mat C = compound_matrix(A, k);
    bm::DoNotOptimize(C.data());
  }
}
BENCHMARK(BM_CompoundMatrix)->ArgsProduct({{1, 2, 3}, {3, 5, 8}});

static void BM_CanonicalLiftTorus(bm::State& st) {
  const auto torus = maps::torus_patch(2.0, 0.5);
  Vec t(2);
  t << 0.3, 1.1;
  for (auto _ : st) {
    KVector xi = canonical_lift(torus, t);
    bm::DoNotOptimize(xi.comps().data());
  }
}
BENCHMARK(BM_CanonicalLiftTorus);

static void BM_ToGrassmann(bm::State& st) {
  const KVector xi(Vec::Zero(5), 2, random_matrix(10, 1, 2).col(0));
  for (auto _ : st) {
    GrassmannPoint p = to_grassmann(xi);
    bm::DoNotOptimize(p.w.data());
  }
}
BENCHMARK(BM_ToGrassmann);
