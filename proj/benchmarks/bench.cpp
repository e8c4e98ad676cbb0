#include <benchmark/benchmark.h>

#include "conjlat/report.hpp"

using namespace conjlat;

namespace {

void BM_QuadraticGram(benchmark::State& state) {
  for (auto _ : state) {
    auto g = gram_quadratic(1, -2, -1);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_QuadraticGram);

void BM_ShortestVectorsCubic(benchmark::State& state) {
  IntMatrix g = {{Int(21), Int(-6), Int(-6)},
                 {Int(-6), Int(21), Int(-6)},
                 {Int(-6), Int(-6), Int(21)}};
  for (auto _ : state) {
    auto mv = shortest_vectors_exact(g);
    benchmark::DoNotOptimize(mv);
  }
}
BENCHMARK(BM_ShortestVectorsCubic);

void BM_LLLQuintic(benchmark::State& state) {
  IntMatrix g(5, IntVector(5, Int(-84)));
  for (int i = 0; i < 5; ++i) g[i][i] = 360;
  for (auto _ : state) {
    auto r = lll_reduce_gram(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_LLLQuintic);

void BM_RootsQuintic(benchmark::State& state) {
  auto f = IntPolynomial::parse("x^5+x^4-4x^3-3x^2+3x+1");
  for (auto _ : state) {
    auto rs = find_roots(f, 256);
    benchmark::DoNotOptimize(rs);
  }
}
BENCHMARK(BM_RootsQuintic);

void BM_AnalyzeWorkedCubic(benchmark::State& state) {
  auto f = IntPolynomial::parse("x^3+3x^2-6x+1");
  for (auto _ : state) {
    auto rep = analyze(f);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_AnalyzeWorkedCubic);

}  // namespace

BENCHMARK_MAIN();
