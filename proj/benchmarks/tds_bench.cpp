#include <benchmark/benchmark.h>

#include "tds/assign.hpp"
#include "tds/features.hpp"
#include "tds/synth.hpp"

namespace {

tds::GraphPair make_pair(std::size_t n) {
  return tds::generate_pair({n, 0.0, 0.95, 1, tds::PMode::log_n});
}

void BM_ExtractAll(benchmark::State& state) {
  const tds::Graph g = make_pair(static_cast<std::size_t>(state.range(0))).a;
  for (auto _ : state) benchmark::DoNotOptimize(tds::extract_all(g, {}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExtractAll)->RangeMultiplier(2)->Range(1000, 16000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_SimilarityMatrix(benchmark::State& state) {
  const auto pair = make_pair(static_cast<std::size_t>(state.range(0)));
  const auto fa = tds::extract_all(pair.a, {});
  const auto fb = tds::extract_all(pair.b, {});
  for (auto _ : state) benchmark::DoNotOptimize(tds::similarity_matrix(fa, fb));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SimilarityMatrix)->RangeMultiplier(2)->Range(500, 4000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Solver(benchmark::State& state, tds::Matcher method) {
  const auto pair = make_pair(static_cast<std::size_t>(state.range(0)));
  const auto x = tds::similarity_matrix(tds::extract_all(pair.a, {}), tds::extract_all(pair.b, {}));
  for (auto _ : state) benchmark::DoNotOptimize(tds::solve(x, method));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_Solver, hungarian, tds::Matcher::hungarian)
    ->RangeMultiplier(2)->Range(250, 2000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNCubed);
BENCHMARK_CAPTURE(BM_Solver, greedy, tds::Matcher::greedy)
    ->RangeMultiplier(2)->Range(500, 4000)->Unit(benchmark::kMillisecond)->Complexity();

}  // namespace

BENCHMARK_MAIN();
