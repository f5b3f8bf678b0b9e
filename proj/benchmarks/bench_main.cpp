#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "transcat/cayley_ci.hpp"
#include "transcat/classify.hpp"
#include "transcat/conjugacy.hpp"
#include "transcat/elusive.hpp"
#include "transcat/lattice.hpp"
#include "transcat/vt_graphs.hpp"

using namespace transcat;

namespace {

ClassifyConfig config() {
  ClassifyConfig cfg;
  cfg.data_dir = TRANSCAT_BENCH_DATA_DIR;
  return cfg;
}

CatalogueSet& shared() {
  static CatalogueSet cats(config());
  return cats;
}

const SmallGroupSeed& small_group(int order, int index) {
  static const auto seeds = read_small_groups(std::filesystem::path(TRANSCAT_BENCH_DATA_DIR) / "small_groups.txt");
  for (const auto& s : seeds) {
    if (s.order == order && s.index == index) return s;
  }
  throw Error("no such small group");
}

void BM_SchreierSimsSymmetric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto gens = PermGroup::symmetric(n).generators();
  for (auto _ : state) benchmark::DoNotOptimize(PermGroup(n, gens).order());
}
BENCHMARK(BM_SchreierSimsSymmetric)->Arg(8)->Arg(16)->Arg(32);

void BM_RandomElement(benchmark::State& state) {
  const auto g = PermGroup::symmetric(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(g.random_element(rng));
}
BENCHMARK(BM_RandomElement)->Arg(16);

void BM_ConjugacyDegree12(benchmark::State& state) {
  const auto& cat = shared().catalogue(12);
  const PermGroup g = cat.entries[150].group();
  const PermGroup h = g.conjugated(Permutation::from_cycles(12, {{0, 5, 7}, {2, 11}}));
  for (auto _ : state) benchmark::DoNotOptimize(are_conjugate(g, h));
}
BENCHMARK(BM_ConjugacyDegree12);

void BM_SubgroupLatticeSymmetric(benchmark::State& state) {
  const auto g = PermGroup::symmetric(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroup_classes(g).size());
}
BENCHMARK(BM_SubgroupLatticeSymmetric)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ClassifyDegree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CatalogueSet cats(config());
    benchmark::DoNotOptimize(cats.catalogue(n).size());
  }
}
BENCHMARK(BM_ClassifyDegree)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_GraphCensus(benchmark::State& state) {
  const auto& cat = shared().catalogue(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transitive_graph_census(cat).total);
}
BENCHMARK(BM_GraphCensus)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_CiVerdict(benchmark::State& state) {
  const auto& s = small_group(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(is_ci_group(s).ci);
}
BENCHMARK(BM_CiVerdict)->Args({16, 14})->Args({24, 12})->Unit(benchmark::kMillisecond);

void BM_ElusiveCensusDegree12(benchmark::State& state) {
  const auto& cat = shared().catalogue(12);
  for (auto _ : state) benchmark::DoNotOptimize(elusive_census(cat).size());
}
BENCHMARK(BM_ElusiveCensusDegree12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
