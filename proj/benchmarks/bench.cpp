#include <benchmark/benchmark.h>

#include <random>

#include "edgecache/analysis.hpp"
#include "edgecache/cache.hpp"
#include "edgecache/geometry.hpp"
#include "edgecache/sim.hpp"
#include "edgecache/traffic.hpp"

using namespace edgecache;

static void BM_LruRequest(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const ZipfCatalogue cat(10000, 0.78);
  LruCache lru(k);
  Rng rng = make_rng(1);
  for (auto _ : state) {
    const ObjectId id = cat.sample(rng);
    if (lru.contains(id)) {
      lru.touch(id);
    } else {
      benchmark::DoNotOptimize(lru.insert(id));
    }
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_LruRequest)->Arg(100)->Arg(1000);

static void BM_CoveringStations(benchmark::State& state) {
  FieldParams fp;
  fp.coverage_radius = static_cast<double>(state.range(0)) / 1000.0;
  const auto field = sample_station_field(fp, 2);
  Rng rng = make_rng(3);
  std::uniform_real_distribution<double> u(0.0, 12.0);
  std::vector<std::size_t> out;
  for (auto _ : state) {
    field.covering_stations({u(rng), u(rng)}, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CoveringStations)->Arg(1130)->Arg(2250);

static void BM_CharacteristicTime(benchmark::State& state) {
  auto rates = zipf_pmf(static_cast<std::size_t>(state.range(0)), 0.78);
  for (auto& r : rates) r *= 0.046;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_characteristic_time(rates, 100));
  }
}
BENCHMARK(BM_CharacteristicTime)->Arg(1000)->Arg(10000);

static void BM_Realization(benchmark::State& state) {
  Scenario sc;
  sc.geometry.coverage_radius = 1.382;
  sc.traffic.catalogue_size = 10000;
  sc.cache_size = 100;
  sc.duration = 2.0e4;
  sc.policies = {{SimPolicyKind::single_lru},
                 {SimPolicyKind::multi_lru_one},
                 {SimPolicyKind::multi_lru_all}};
  const auto ctx = ExperimentContext::build(sc);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_realization(sc, ctx, ++seed));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(sc.expected_requests()));
}
BENCHMARK(BM_Realization)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
