#include <benchmark/benchmark.h>

#include <map>

#include "rothlab/bounds.hpp"
#include "rothlab/census.hpp"

using namespace rothlab;

namespace {

const std::vector<Biadjacency>& scaffolds(std::size_t s) {
  static std::map<std::size_t, std::vector<Biadjacency>> cache;
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, enumerate_connected_bipartite(4, s)).first;
  return it->second;
}

void BM_CensusSerial(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  scaffolds(s);
  for (auto _ : state) benchmark::DoNotOptimize(run_census_serial(4, s, Graph::complete(4)).row);
}

void BM_CensusParallel(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  scaffolds(s);
  for (auto _ : state) benchmark::DoNotOptimize(run_census(4, s, Graph::complete(4)).row);
}

void BM_Enumerate(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected_bipartite(4, s).size());
}

void BM_CycleSweep(benchmark::State& state) {
  std::vector<std::size_t> ks;
  for (std::size_t k = 3; k <= 60; ++k) ks.push_back(k);
  for (auto _ : state) benchmark::DoNotOptimize(cycle_sweep(ks, {2.1, 3.0, 5.0, 10.0}).size());
}

}  // namespace

BENCHMARK(BM_CensusSerial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycleSweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
