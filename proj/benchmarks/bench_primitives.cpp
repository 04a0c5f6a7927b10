#include <benchmark/benchmark.h>

#include "nsky/boosting.hpp"
#include "nsky/generators.hpp"
#include "nsky/oracle.hpp"
#include "nsky/search.hpp"

namespace {

void BM_OracleCompare(benchmark::State& state) {
  const auto x = nsky::gen_uniform(64, 2, 1);
  nsky::NoisyOracle oracle(x, 1.0 / 3.0, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.compare(0, 1, 0));
  }
}
BENCHMARK(BM_OracleCompare);

void BM_BoostProb(benchmark::State& state) {
  nsky::Rng rng(3);
  const double delta = 1.0 / (1 << state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nsky::boost_prob([&] { return rng.next_unit() < 2.0 / 3.0; }, delta, delta));
  }
}
BENCHMARK(BM_BoostProb)->Arg(3)->Arg(6)->Arg(10);

void BM_NoisySearch(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const auto x = nsky::gen_uniform(m + 1, 1, 4);
  std::vector<nsky::PointId> bps;
  for (nsky::PointId p = 1; p <= m; ++p) bps.push_back(p);
  std::sort(bps.begin(), bps.end(), [&](auto a, auto b) {
    return x.coord(a, 0) < x.coord(b, 0);
  });
  nsky::NoisyOracle oracle(x, 1.0 / 3.0, 5);
  std::uint64_t queries = 0;
  for (auto _ : state) {
    const auto before = oracle.snapshot_queries();
    benchmark::DoNotOptimize(nsky::noisy_search(0, 0, bps, 0.01, oracle));
    queries += oracle.snapshot_queries() - before;
  }
  state.counters["queries/op"] =
      benchmark::Counter(static_cast<double>(queries), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_NoisySearch)->Arg(15)->Arg(31)->Arg(63);

}  // namespace
