#include <benchmark/benchmark.h>

#include "nsky/algorithms.hpp"
#include "nsky/generators.hpp"
#include "nsky/oracle.hpp"

namespace {

void BM_SkylineExact(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto x = nsky::gen_uniform(n, 3, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsky::skyline_exact(x));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SkylineExact)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_GuessSkylineHighDim(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto x = nsky::gen_fixed_skyline(n, 3, 4, 13);
  std::uint64_t queries = 0;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    nsky::NoisyOracle oracle(x, 1.0 / 3.0, ++seed);
    benchmark::DoNotOptimize(nsky::guess_skyline_high_dim(x, 0.1, oracle));
    queries += oracle.snapshot_queries();
  }
  state.counters["queries/op"] =
      benchmark::Counter(static_cast<double>(queries), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_GuessSkylineHighDim)->Arg(128)->Arg(256);

void BM_SkyGM(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto x = nsky::gen_uniform(n, 3, 17);
  std::uint64_t queries = 0;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    nsky::NoisyOracle oracle(x, 1.0 / 3.0, ++seed);
    benchmark::DoNotOptimize(nsky::sky_gm(x, 0.1, oracle));
    queries += oracle.snapshot_queries();
  }
  state.counters["queries/op"] =
      benchmark::Counter(static_cast<double>(queries), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_SkyGM)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
