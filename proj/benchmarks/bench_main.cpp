#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "matchrb/antiramsey.hpp"
#include "matchrb/gadgets.hpp"
#include "matchrb/gallai.hpp"
#include "matchrb/matching.hpp"
#include "matchrb/rainbow.hpp"

namespace {

using namespace matchrb;

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

EdgeColoring random_coloring(int n, int colors, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Color> pick(1, colors);
  std::vector<Color> c(pair_count(n));
  for (Color& x : c) x = pick(rng);
  return EdgeColoring(n, c);
}

void BM_MatchingNumber(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 4.0 / n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(matching_number(g));
}
BENCHMARK(BM_MatchingNumber)->Arg(16)->Arg(32)->Arg(64);

void BM_Decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 3.0 / n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_Decompose)->Arg(12)->Arg(32)->Arg(64);

void BM_RainbowRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EdgeColoring col = random_coloring(n, static_cast<int>(state.range(1)), 3);
  RainbowSolver solver;
  for (auto _ : state) {
    solver.reset(col);
    benchmark::DoNotOptimize(solver.maximum());
  }
}
BENCHMARK(BM_RainbowRandom)->Args({8, 9})->Args({12, 20})->Args({16, 40});

void BM_RainbowLowerBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const EdgeColoring col = lower_bound_coloring(n, k).to_coloring();
  RainbowSolver solver;
  for (auto _ : state) {
    solver.reset(col);
    benchmark::DoNotOptimize(solver.find(k));
  }
}
BENCHMARK(BM_RainbowLowerBound)->Args({16, 8})->Args({20, 8})->Args({14, 7});

void BM_Oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(exact_f_oracle(n, k));
}
BENCHMARK(BM_Oracle)->Args({5, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
