#include <benchmark/benchmark.h>

#include "ramify/strata.hpp"
#include "ramify/types.hpp"

using namespace ramify;

namespace {

void BM_BuildPoset(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_poset(n).labels.size());
}
BENCHMARK(BM_BuildPoset)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_TopCohomology(benchmark::State& state) {
  const StratumPoset P = build_poset(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(interval_cohomology(P.poset, 0, *P.poset.top()).ranks.size());
}
BENCHMARK(BM_TopCohomology)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_Semimodular(benchmark::State& state) {
  const StratumPoset P = build_poset(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_locally_semimodular(P.poset).ok);
}
BENCHMARK(BM_Semimodular)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_PartitionLatticeInvariants(benchmark::State& state) {
  const PartitionLattice L = partition_lattice(static_cast<int>(state.range(0)));
  const GroupAction action = symmetric_action(L);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_cohomology(L.poset, *L.poset.top(), action).ranks.size());
}
BENCHMARK(BM_PartitionLatticeInvariants)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_CountingFunction(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(c_of_m(m, Convention::Eq12));
    benchmark::DoNotOptimize(c_of_m(m, Convention::Multiset));
  }
}
BENCHMARK(BM_CountingFunction)->Arg(8)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
