#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "nsky/algorithms.hpp"
#include "nsky/generators.hpp"
#include "nsky/oracle.hpp"
#include "nsky/rng.hpp"
#include "test_util.hpp"

using namespace nsky;
using nsky_test::make_instance;

namespace {

const std::vector<PointId>& truth_of(const Instance& x) { return *x.meta()->skyline; }

}  // namespace

TEST_CASE("sky_gm noiseless") {
  const auto x = make_instance({{1, 3}, {2, 2}, {3, 1}, {0, 0}});
  NoisyOracle oracle(x, 0.0, 1);
  CHECK(sky_gm(x, 0.1, oracle) == std::vector<PointId>{0, 1, 2});

  const auto one = make_instance({{9, 9}});
  NoisyOracle oracle1(one, 0.0, 1);
  CHECK(sky_gm(one, 0.1, oracle1) == std::vector<PointId>{0});
  CHECK(oracle1.snapshot_queries() == 0);
}

TEST_CASE("sky_gm ledger accounts every query to the sort phase") {
  const auto x = gen_uniform(32, 2, 5);
  NoisyOracle oracle(x, 1.0 / 3.0, 6);
  QueryLedger ledger;
  (void)sky_gm(x, 0.1, oracle, &ledger);
  CHECK(ledger.total() == oracle.snapshot_queries());
  CHECK(ledger.get(Phase::kSort) == ledger.total());
  CHECK(ledger.total() > 0);
}

TEST_CASE("skyline_high_dim noiseless") {
  const auto x = make_instance({{1, 3}, {2, 2}, {3, 1}, {0, 0}});
  NoisyOracle oracle(x, 0.0, 1);
  CHECK(skyline_high_dim(4, x, 0.1, oracle) == std::vector<PointId>{0, 1, 2});

  // k = 1: one skyline point, single round
  NoisyOracle oracle2(x, 0.0, 2);
  const auto one = skyline_high_dim(1, x, 0.1, oracle2);
  REQUIRE(one.size() == 1);
  const auto sky = skyline_exact(x);
  CHECK(std::binary_search(sky.begin(), sky.end(), one[0]));
}

TEST_CASE("guess_skyline_high_dim noiseless stops by the schedule") {
  // skyline of size 3: k=2 returns 2 (=k, continue), k=4 returns 3 (<4, stop)
  const auto x = gen_fixed_skyline(24, 2, 3, 1234);
  NoisyOracle oracle(x, 0.0, 1);
  CHECK(guess_skyline_high_dim(x, 0.1, oracle) == truth_of(x));

  const auto single = make_instance({{5, 5}});
  NoisyOracle oracle1(single, 0.0, 1);
  CHECK(guess_skyline_high_dim(single, 0.1, oracle1) == std::vector<PointId>{0});
}

TEST_CASE("noiseless totality across algorithms (spot grid)") {
  AlgoConfig defaults;
  AlgoConfig test_mode;
  test_mode.test_mode = TestModeConstants{};
  Rng seeds(0x707a11);
  for (const std::uint32_t n : {16u, 64u}) {
    for (const std::uint32_t d : {2u, 3u}) {
      for (int rep = 0; rep < 3; ++rep) {
        const std::uint64_t seed = seeds.next_u64();
        for (const bool fixed : {false, true}) {
          const auto x = fixed ? gen_fixed_skyline(n, d, 1 + seed % 8, seed)
                               : gen_uniform(n, d, seed);
          const auto& truth = truth_of(x);
          const auto k = static_cast<std::uint64_t>(truth.size());
          {
            NoisyOracle o(x, 0.0, seed + 1);
            CHECK(sky_gm(x, 0.1, o) == truth);
          }
          {
            NoisyOracle o(x, 0.0, seed + 2);
            CHECK(skyline_high_dim(k, x, 0.1, o) == truth);
          }
          {
            NoisyOracle o(x, 0.0, seed + 3);
            CHECK(guess_skyline_high_dim(x, 0.1, o) == truth);
          }
          {
            NoisyOracle o(x, 0.0, seed + 4);
            CHECK(skyline_low_dim(k, x, 0.1, defaults, o) == truth);
          }
          {
            NoisyOracle o(x, 0.0, seed + 5);
            CHECK(skyline_low_dim(k, x, 0.1, test_mode, o) == truth);
          }
          {
            NoisyOracle o(x, 0.0, seed + 6);
            CHECK(guess_skyline_low_dim(x, 0.1, defaults, o) == truth);
          }
          {
            NoisyOracle o(x, 0.0, seed + 7);
            CHECK(guess_skyline_low_dim(x, 0.1, test_mode, o) == truth);
          }
        }
      }
    }
  }
}

TEST_CASE("correct outputs are antichains; noiseless outputs always are") {
  const auto x = gen_fixed_skyline(48, 3, 6, 99);
  for (int t = 0; t < 30; ++t) {
    NoisyOracle oracle(x, 1.0 / 3.0, derive_seed(0xac, t));
    const auto out = guess_skyline_high_dim(x, 0.1, oracle);
    if (out == truth_of(x)) CHECK(nsky_test::is_antichain(x, out));
  }
  NoisyOracle noiseless(x, 0.0, 1);
  const auto out = guess_skyline_high_dim(x, 0.1, noiseless);
  CHECK(nsky_test::is_antichain(x, out));
}

TEST_CASE("size guard reroutes to sky_gm with the reduced budget, per seed") {
  // defaults, n = 256, d = 2, k = 16: 16^5 >= 256 fires the guard
  const auto x = gen_uniform(256, 2, 42);
  const double delta = 0.1;
  const std::uint64_t k = 16;
  const double delta_prime = delta / std::pow(2.0 * 2 * k, 5.0);
  for (const std::uint64_t seed : {7ull, 8ull, 9ull}) {
    AlgoConfig defaults;
    LowDimDiag diag;
    NoisyOracle a(x, 1.0 / 3.0, seed);
    const auto via_guard = skyline_low_dim(k, x, delta, defaults, a, nullptr, &diag);
    CHECK(diag.guard_fired);

    NoisyOracle b(x, 1.0 / 3.0, seed);
    const auto direct = sky_gm(x, delta_prime, b);
    CHECK(via_guard == direct);
    CHECK(a.snapshot_queries() == b.snapshot_queries());
  }
}

TEST_CASE("guess_skyline_low_dim first round follows the squaring schedule") {
  // d=2, delta=0.25: k starts at 64, the first subcall uses k = 64^2 = 4096
  // with budget 0.125. At n = 64 the guard fires, so the run must equal a
  // direct sky_gm with delta' = 0.125/(2*2*4096)^5 on the same oracle seed.
  const auto x = gen_uniform(64, 2, 11);
  const double delta_prime = 0.125 / std::pow(2.0 * 2 * 4096, 5.0);
  AlgoConfig defaults;
  NoisyOracle a(x, 1.0 / 3.0, 77);
  const auto wrapped = guess_skyline_low_dim(x, 0.25, defaults, a);
  NoisyOracle b(x, 1.0 / 3.0, 77);
  const auto direct = sky_gm(x, delta_prime, b);
  CHECK(wrapped == direct);
  CHECK(a.snapshot_queries() == b.snapshot_queries());
}

TEST_CASE("bucketing pipeline runs its phases in test mode, exactly") {
  // crafted 2-d instance, n = 128, 3 skyline points, sample size 8
  const auto x = gen_fixed_skyline(128, 2, 3, 2024);
  AlgoConfig cfg;
  cfg.test_mode = TestModeConstants{.initial_k = 0, .sample_size = 8};

  LowDimDiag diag;
  NoisyOracle oracle(x, 0.0, 5);
  QueryLedger ledger;
  const auto out = skyline_low_dim(4, x, 0.1, cfg, oracle, &ledger, &diag);
  CHECK(out == truth_of(x));
  CHECK_FALSE(diag.guard_fired);
  CHECK(diag.restarts == 0);
  CHECK(diag.sample_size == 8);
  CHECK(ledger.get(Phase::kSort) > 0);
  CHECK(ledger.get(Phase::kSearch) > 0);
  CHECK(ledger.get(Phase::kEliminate) > 0);
  CHECK(ledger.total() == oracle.snapshot_queries());

  // Phase (ii) must visit exactly the undominated frontier of the assigned
  // buckets (noiseless run: the assignment is the exact partition).
  std::set<std::vector<std::uint32_t>> assigned;
  for (PointId p = 0; p < x.size(); ++p) {
    std::vector<std::uint32_t> key(2);
    for (std::uint32_t i = 0; i < 2; ++i) key[i] = diag.point_leaf[i][p];
    assigned.insert(key);
  }
  auto cell_of = [&](const std::vector<std::uint32_t>& key) {
    std::vector<Interval> cells;
    for (std::uint32_t i = 0; i < 2; ++i) {
      std::vector<double> vals;
      for (const auto b : diag.breakpoints[i]) vals.push_back(x.coord(b, i));
      cells.push_back(partition_cell(vals, key[i]));
    }
    return Bucket{cells, {}, {}};
  };
  std::set<std::vector<std::uint32_t>> frontier;
  for (const auto& key : assigned) {
    bool dominated = false;
    for (const auto& other : assigned) {
      if (bucket_dominates(cell_of(other), cell_of(key))) { dominated = true; break; }
    }
    if (!dominated) frontier.insert(key);
  }
  const std::set<std::vector<std::uint32_t>> visited(diag.tested_buckets.begin(),
                                                     diag.tested_buckets.end());
  CHECK(visited == frontier);

  // The reduced problem keeps every true skyline point.
  for (const auto id : truth_of(x)) {
    CHECK(std::binary_search(diag.reduced_ids.begin(), diag.reduced_ids.end(), id));
  }
}

TEST_CASE("elimination restarts hit the cap and fall back to sky_gm") {
  // A pure antichain packs every point into its own frontier bucket, so the
  // confirmed-nonempty count immediately exceeds n/log2(n) and every attempt
  // restarts until the cap forces the sorting fallback. Noiseless, so the
  // fallback output is still exact.
  const auto x = gen_fixed_skyline(32, 2, 32, 7);
  AlgoConfig cfg;
  cfg.test_mode = TestModeConstants{.initial_k = 0, .sample_size = 32};
  cfg.restart_cap = 2;
  LowDimDiag diag;
  NoisyOracle oracle(x, 0.0, 3);
  QueryLedger ledger;
  const auto out = skyline_low_dim(32, x, 0.1, cfg, oracle, &ledger, &diag);
  CHECK(out == truth_of(x));
  CHECK(diag.fell_back);
  CHECK(diag.restarts == static_cast<std::uint32_t>(cfg.restart_cap) + 1);
  CHECK(ledger.get(Phase::kFallback) > 0);
}

TEST_CASE("query accounting is monotone and phase sums match totals") {
  const auto x = gen_fixed_skyline(64, 3, 4, 31);
  NoisyOracle oracle(x, 1.0 / 3.0, 8);
  QueryLedger ledger;
  const auto q0 = oracle.snapshot_queries();
  (void)guess_skyline_high_dim(x, 0.1, oracle, &ledger);
  CHECK(oracle.snapshot_queries() > q0);
  CHECK(ledger.total() == oracle.snapshot_queries());
  CHECK(ledger.get(Phase::kScan) > 0);
  CHECK(ledger.get(Phase::kMaxLex) > 0);
}

TEST_CASE("parameter validation") {
  const auto x = make_instance({{1, 1}});
  NoisyOracle oracle(x, 0.0, 1);
  AlgoConfig cfg;
  CHECK_THROWS(sky_gm(x, 0.0, oracle));
  CHECK_THROWS(skyline_high_dim(0, x, 0.1, oracle));
  CHECK_THROWS(skyline_high_dim(2, x, 0.7, oracle));
  CHECK_THROWS(skyline_low_dim(2, x, 0.5, cfg, oracle));
  CHECK_THROWS(guess_skyline_low_dim(x, 0.5, cfg, oracle));
}
