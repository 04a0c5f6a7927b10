#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nsky/geometry.hpp"
#include "nsky/oracle.hpp"

namespace nsky {

// Desk-scale knobs for exercising the bucketing pipeline, which the size
// guard would otherwise always reroute to the sorting baseline.
struct TestModeConstants {
  std::uint64_t initial_k = 0;    // starting guess of guess_skyline_low_dim (0 = schedule default)
  std::uint64_t sample_size = 0;  // bucketing sample size override (0 = formula)
};

struct AlgoConfig {
  int guard_exponent = 5;  // reroute to sky_gm when k^e >= n or d^e >= n
  int restart_cap = 16;    // elimination restarts before falling back to sky_gm
  std::optional<TestModeConstants> test_mode;  // presence disables the size guard
};

enum class Phase : std::size_t {
  kSort,       // noisy sorting (sky_gm dimension sorts, bucketing sample sorts)
  kDedupe,     // duplicate removal on sorted samples
  kSearch,     // bucket placement searches
  kEliminate,  // bucket emptiness tests
  kScan,       // not-dominated-by-found-skyline scans
  kMaxLex,     // lexicographic-maximum tournaments
  kFallback,   // sky_gm runs taken via the size guard or the restart cap
  kCount
};

const char* phase_name(Phase ph);

struct QueryLedger {
  std::array<std::uint64_t, static_cast<std::size_t>(Phase::kCount)> by_phase{};

  void add(Phase ph, std::uint64_t q) { by_phase[static_cast<std::size_t>(ph)] += q; }
  std::uint64_t get(Phase ph) const { return by_phase[static_cast<std::size_t>(ph)]; }
  std::uint64_t total() const;
};

// Introspection into one skyline_low_dim call (tests and the harness).
struct LowDimDiag {
  bool guard_fired = false;
  bool fell_back = false;  // restart cap exhausted
  std::uint32_t restarts = 0;
  std::uint64_t sample_size = 0;
  std::vector<std::vector<PointId>> breakpoints;            // per dim, last attempt
  std::vector<std::vector<std::uint32_t>> point_leaf;       // [dim][point id]
  std::vector<std::vector<std::uint32_t>> tested_buckets;   // phase-(ii) visit order
  std::vector<PointId> reduced_ids;                         // the X' handed to phase (iii)
};

// Sorting baseline: noisy-sort every dimension with budget delta/d, then
// deduce the skyline from the d rank sequences with no further queries.
// Correct w.p. >= 1 - delta; expected queries O(dn log(dn/delta)).
std::vector<PointId> sky_gm(const Instance& x, double delta, NoisyOracle& oracle,
                            QueryLedger* ledger = nullptr);

// Incremental algorithm: find a candidate not dominated by the skyline
// points found so far, then add the lexicographic maximum among the
// candidates dominating it. Returns min(k, |skyline|) skyline points w.p.
// >= 1 - delta whenever k >= |skyline|. Expected queries O(dkn log(k/delta)).
std::vector<PointId> skyline_high_dim(std::uint64_t k, const Instance& x, double delta,
                                      NoisyOracle& oracle, QueryLedger* ledger = nullptr);

// Same, restricted to a candidate subset (phase (iii) of skyline_low_dim).
std::vector<PointId> skyline_high_dim_subset(std::uint64_t k,
                                             std::span<const PointId> candidates,
                                             double delta, NoisyOracle& oracle,
                                             QueryLedger* ledger = nullptr);

// Doubling guess wrapper: k = 2, 4, 8, ... with per-round budget delta/8^j,
// stopping as soon as fewer than k points come back. Correct w.p. >= 1 - delta;
// expected queries O(ndk log(k/delta) + dk^2 log(kn/delta)).
std::vector<PointId> guess_skyline_high_dim(const Instance& x, double delta,
                                            NoisyOracle& oracle,
                                            QueryLedger* ledger = nullptr);

// Bucketing algorithm. delta' = delta/(2dk)^5; unless the test-mode override
// is present, k^5 >= n or d^5 >= n reroutes to sky_gm(X, delta'). Phase (i)
// noisy-sorts a per-dimension sample (size dk^2 log2(d^2k^2/delta'), capped
// at n), removes duplicates, and places every point into a bucket by noisy
// search. Phase (ii) tests buckets whose dominating buckets are all known
// empty, restarting the whole call (fresh sampling seed, at most
// restart_cap times, then sky_gm) once more than n/log2(n) buckets are
// confirmed nonempty. Phase (iii) hands the points of the undominated
// nonempty buckets to skyline_high_dim.
std::vector<PointId> skyline_low_dim(std::uint64_t k, const Instance& x, double delta,
                                     const AlgoConfig& cfg, NoisyOracle& oracle,
                                     QueryLedger* ledger = nullptr,
                                     LowDimDiag* diag = nullptr);

// Squaring guess wrapper: k starts at (floor(d/delta))^2 (clamped to >= 4)
// and squares each round while the budget halves, stopping as soon as fewer
// than k points come back. Correct w.p. >= 1 - delta; expected queries
// O(nd log(dk/delta)).
std::vector<PointId> guess_skyline_low_dim(const Instance& x, double delta,
                                           const AlgoConfig& cfg, NoisyOracle& oracle,
                                           QueryLedger* ledger = nullptr);

}  // namespace nsky
