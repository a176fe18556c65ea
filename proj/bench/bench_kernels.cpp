#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "mfio/clique.hpp"
#include "mfio/datagen.hpp"
#include "mfio/pair_count.hpp"
#include "mfio/qubo.hpp"

namespace {

using namespace mfio;

const TransactionDb& planted_db(std::size_t scale) {
  static std::map<std::size_t, TransactionDb> cache;
  auto it = cache.find(scale);
  if (it == cache.end()) {
    PlantedComparisonConfig config;
    config.scale = scale;
    it = cache.emplace(scale, generate_planted_comparison(config).db).first;
  }
  return it->second;
}

ThresholdGraph random_graph(std::size_t k, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(density);
  ThresholdGraph g(k, Threshold{});
  for (ItemId i = 0; i < k; ++i)
    for (ItemId j = i + 1; j < k; ++j)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

void BM_CountPairsSerial(benchmark::State& state) {
  const auto& db = planted_db(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_pairs_serial(db));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * db.size()));
}

void BM_CountPairsParallel(benchmark::State& state) {
  const auto& db = planted_db(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_pairs(db));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * db.size()));
}

AnnealParams bench_params() {
  AnnealParams p;
  p.restarts = 8;
  p.sweeps = 200;
  p.seed = 1;
  return p;
}

void BM_AnnealSerial(benchmark::State& state) {
  const auto q = build_qubo(random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 3));
  const auto p = bench_params();
  for (auto _ : state) benchmark::DoNotOptimize(solve_qubo_annealing_serial(q, p));
}

void BM_AnnealParallel(benchmark::State& state) {
  const auto q = build_qubo(random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 3));
  const auto p = bench_params();
  for (auto _ : state) benchmark::DoNotOptimize(solve_qubo_annealing(q, p));
}

void BM_MaxCliqueExact(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 4);
  for (auto _ : state) benchmark::DoNotOptimize(max_clique_exact(g));
}

}  // namespace

BENCHMARK(BM_CountPairsSerial)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountPairsParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AnnealSerial)->Arg(50)->Arg(250)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnnealParallel)->Arg(50)->Arg(250)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MaxCliqueExact)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
