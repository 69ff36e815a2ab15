#include <benchmark/benchmark.h>

#include <random>

#include "ramify/census.hpp"

using namespace ramify;

namespace {

std::vector<std::vector<Elem>> samples(const Field& F, int n, std::size_t count) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<Elem> e(0, F.q() - 1);
  std::vector<std::vector<Elem>> out(count, std::vector<Elem>(static_cast<std::size_t>(n)));
  for (auto& a : out)
    for (auto& x : a) x = e(rng);
  return out;
}

void BM_KernelLength(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Field F = Field::make(static_cast<std::uint32_t>(state.range(1)));
  RamLengthKernel kernel(F, n);
  const auto polys = samples(F, n, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(polys[i++ & 1023]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_KernelLength)->Args({3, 7})->Args({6, 11})->Args({6, 13})->Args({10, 13});

void BM_GenericLength(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Field F = Field::make(static_cast<std::uint32_t>(state.range(1)));
  const auto polys = samples(F, n, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ram_length(F, census_poly(polys[i++ & 1023])));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GenericLength)->Args({3, 7})->Args({6, 11});

void BM_TypeOf(benchmark::State& state) {
  const Field F = Field::make(11);
  const auto polys = samples(F, 6, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(type_of(F, census_poly(polys[i++ & 1023])));
  }
}
BENCHMARK(BM_TypeOf);

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Field F = Field::make(static_cast<std::uint32_t>(state.range(1)));
  CensusOptions options;
  options.jobs = static_cast<unsigned>(state.range(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(census(n, 1, F, true, options).count);
  }
}
BENCHMARK(BM_Census)->Args({4, 7, 1})->Args({5, 7, 1})->Args({5, 11, 1})->Args({5, 11, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
