// Parallel batch kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "covkit/batch.hpp"

using namespace covkit;

namespace {

std::vector<CoverInstance> random_family(std::size_t count) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> delta(-2, 2), entry(0, 4);
  std::vector<CoverInstance> out;
  while (out.size() < count) {
    std::set<IntVector> seen;
    std::vector<IntVector> vectors;
    for (int i = 0; i < 5; ++i) {
      IntVector v{delta(rng), delta(rng), delta(rng)};
      if (seen.insert(v).second) vectors.push_back(v);
    }
    out.push_back({Vas(3, vectors), IntVector{entry(rng), entry(rng), entry(rng)},
                   IntVector{entry(rng), entry(rng), entry(rng)}});
  }
  return out;
}

std::vector<std::pair<Configuration, Configuration>> line_family(long count) {
  std::vector<std::pair<Configuration, Configuration>> out;
  for (long m = 1; m <= count; ++m) out.emplace_back(IntVector{0, 0}, IntVector{m, m});
  return out;
}

const Model& plane() {
  static const Model m = Vas(2, {IntVector{1, 0}, IntVector{0, 1}, IntVector{-1, 2}});
  return m;
}

template <auto Kernel>
void decide(benchmark::State& state) {
  auto family = random_family(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(family, Engine::Backward, SearchLimits{}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void growth(benchmark::State& state) {
  auto family = line_family(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(plane(), family, 40));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(decide<decide_all_serial>)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(decide<decide_all>)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(growth<witness_growth_serial>)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(growth<witness_growth>)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
