#include <benchmark/benchmark.h>

#include "cluster/matchenum.hpp"
#include "cluster/mutation.hpp"
#include "cluster/tilegraphs.hpp"
#include "cluster/verify.hpp"

using namespace cluster;

namespace {

DynkinType type_arg(const benchmark::State& state) {
  return make_type(static_cast<Family>(state.range(0)), static_cast<int>(state.range(1)));
}

void BM_Belt(benchmark::State& state) {
  const DynkinType t = type_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(belt(t, default_belt_cap(t)));
}

// Largest family graph of the type.
MatchingGraph widest(DynkinType t) {
  MatchingGraph best;
  for (const auto& g : enumerate_family(t)) {
    MatchingGraph m = realize(g);
    if (m.nvertices > best.nvertices) best = std::move(m);
  }
  return best;
}

void BM_MatchingMemo(benchmark::State& state) {
  const MatchingGraph g = widest(type_arg(state));
  for (auto _ : state) benchmark::DoNotOptimize(matching_polynomial(g));
  state.counters["vertices"] = g.nvertices;
}

void BM_MatchingTransfer(benchmark::State& state) {
  const MatchingGraph g = widest(type_arg(state));
  for (auto _ : state) benchmark::DoNotOptimize(matching_polynomial_transfer(g));
  state.counters["vertices"] = g.nvertices;
}

void BM_Theorem(benchmark::State& state) {
  const DynkinType t = type_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(t));
}

void types(benchmark::internal::Benchmark* b) {
  b->Args({static_cast<int>(Family::A), 8})
      ->Args({static_cast<int>(Family::A), 12})
      ->Args({static_cast<int>(Family::B), 5})
      ->Args({static_cast<int>(Family::C), 5})
      ->Args({static_cast<int>(Family::D), 6})
      ->Args({static_cast<int>(Family::G2), 2});
}

}  // namespace

BENCHMARK(BM_Belt)->Apply(types)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MatchingMemo)->Apply(types)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MatchingTransfer)->Apply(types)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Theorem)->Apply(types)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
