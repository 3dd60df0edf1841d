#include <benchmark/benchmark.h>

#include "hornkeys/generators.hpp"
#include "hornkeys/hornkeys.hpp"

using namespace hornkeys;

namespace {

HornCnf horn(std::size_t n, std::size_t m) {
  gen::InstanceSeed p;
  p.seed = 17;
  p.n = n;
  p.m = m;
  p.min_body = 1;
  p.max_body = 3;
  return gen::random_horn_cnf(p);
}

void BM_Closure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const HornCnf cnf = horn(n, 4 * n);
  const ClosureEngine engine(cnf);
  const VarSet seed(n, {0, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(engine.closure(seed));
}
BENCHMARK(BM_Closure)->RangeMultiplier(4)->Range(16, 4096);

// Key Horn CNF of a perfect matching; its minimal keys are the n/2 edges.
void BM_KeysOfMatching(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SetFamily edges;
  for (Var v = 0; v + 1 < n; v += 2) edges.push_back(VarSet(n, {v, v + 1}));
  const HornCnf phi = key_horn_cnf(SpernerHypergraph(Universe(n), edges));
  std::size_t keys = 0;
  for (auto _ : state) {
    keys = enumerate_minimal_keys(phi, [](const VarSet&) {}).keys;
  }
  state.counters["keys"] = static_cast<double>(keys);
}
BENCHMARK(BM_KeysOfMatching)->DenseRange(8, 24, 4);

void BM_Dualize(benchmark::State& state) {
  gen::InstanceSeed p;
  p.seed = 5;
  p.n = static_cast<std::size_t>(state.range(0));
  p.m = p.n;
  p.max_body = 3;
  const SpernerHypergraph b = gen::random_sperner(p);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_transversals(b));
}
BENCHMARK(BM_Dualize)->DenseRange(8, 20, 4);

void BM_MaximalIndependentSets(benchmark::State& state) {
  gen::InstanceSeed p;
  p.seed = 9;
  p.n = static_cast<std::size_t>(state.range(0));
  p.density = 0.3;
  const Graph g = gen::random_graph(p);
  std::size_t count = 0;
  for (auto _ : state) {
    MaximalIndependentSets mis(g);
    count = 0;
    while (mis.next()) ++count;
  }
  state.counters["sets"] = static_cast<double>(count);
}
BENCHMARK(BM_MaximalIndependentSets)->DenseRange(10, 30, 10);

void BM_TssToHorn(benchmark::State& state) {
  gen::InstanceSeed p;
  p.seed = 3;
  p.n = static_cast<std::size_t>(state.range(0));
  p.density = 0.2;
  p.max_threshold = 3;
  const ThresholdGraph tg = gen::random_threshold_graph(p);
  for (auto _ : state) benchmark::DoNotOptimize(tss_to_horn(tg));
}
BENCHMARK(BM_TssToHorn)->RangeMultiplier(2)->Range(16, 128);

}  // namespace

BENCHMARK_MAIN();
