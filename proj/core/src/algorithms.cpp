#include "nsky/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "nsky/dominance.hpp"
#include "nsky/rng.hpp"
#include "nsky/search.hpp"

namespace nsky {

namespace {

constexpr std::uint64_t kLowDimSampleSalt = 0x6c6f7764696dULL;  // "lowdim"
constexpr std::uint64_t kGuessCap = 1ULL << 31;

class PhaseScope {
 public:
  PhaseScope(QueryLedger* ledger, NoisyOracle& oracle, Phase ph)
      : ledger_(ledger), oracle_(oracle), ph_(ph), start_(oracle.snapshot_queries()) {}
  ~PhaseScope() {
    if (ledger_) ledger_->add(ph_, oracle_.snapshot_queries() - start_);
  }
  PhaseScope(const PhaseScope&) = delete;
  PhaseScope& operator=(const PhaseScope&) = delete;

 private:
  QueryLedger* ledger_;
  NoisyOracle& oracle_;
  Phase ph_;
  std::uint64_t start_;
};

void require_delta_open_unit(double delta, const char* who) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument(std::string(who) + ": delta must lie in (0, 1)");
  }
}

void require_delta_half(double delta, const char* who) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument(std::string(who) + ": delta must lie in (0, 1/2)");
  }
}

}  // namespace

const char* phase_name(Phase ph) {
  switch (ph) {
    case Phase::kSort: return "sort";
    case Phase::kDedupe: return "dedupe";
    case Phase::kSearch: return "search";
    case Phase::kEliminate: return "eliminate";
    case Phase::kScan: return "scan";
    case Phase::kMaxLex: return "maxlex";
    case Phase::kFallback: return "fallback";
    case Phase::kCount: break;
  }
  return "?";
}

std::uint64_t QueryLedger::total() const {
  std::uint64_t t = 0;
  for (const auto q : by_phase) t += q;
  return t;
}

std::vector<PointId> sky_gm(const Instance& x, double delta, NoisyOracle& oracle,
                            QueryLedger* ledger) {
  require_delta_open_unit(delta, "sky_gm");
  const std::size_t n = x.size();
  const std::uint32_t d = x.dim();
  if (n == 1) return {0};

  // rank[i][id] = position of `id` in the (noisy) dim-i order.
  std::vector<std::vector<std::uint32_t>> rank(d, std::vector<std::uint32_t>(n));
  {
    PhaseScope ph(ledger, oracle, Phase::kSort);
    const std::vector<PointId> ids = x.all_ids();
    for (std::uint32_t i = 0; i < d; ++i) {
      const std::vector<PointId> sorted = noisy_sort(ids, i, delta / d, oracle);
      for (std::size_t pos = 0; pos < sorted.size(); ++pos) {
        rank[i][sorted[pos]] = static_cast<std::uint32_t>(pos);
      }
    }
  }

  // Ranks replace coordinates; the skyline now falls out of an exact
  // pairwise scan with zero further queries.
  std::vector<PointId> out;
  for (std::size_t p = 0; p < n; ++p) {
    bool dominated = false;
    for (std::size_t q = 0; q < n && !dominated; ++q) {
      if (q == p) continue;
      bool geq = true;
      bool strict = false;
      for (std::uint32_t i = 0; i < d; ++i) {
        if (rank[i][q] < rank[i][p]) { geq = false; break; }
        if (rank[i][q] > rank[i][p]) strict = true;
      }
      dominated = geq && strict;
    }
    if (!dominated) out.push_back(static_cast<PointId>(p));
  }
  return out;
}

std::vector<PointId> skyline_high_dim_subset(std::uint64_t k,
                                             std::span<const PointId> candidates,
                                             double delta, NoisyOracle& oracle,
                                             QueryLedger* ledger) {
  if (k < 1) throw std::invalid_argument("skyline_high_dim: k must be >= 1");
  require_delta_half(delta, "skyline_high_dim");
  std::vector<PointId> pool(candidates.begin(), candidates.end());
  const double nn = static_cast<double>(std::max<std::size_t>(pool.size(), 1));
  const double kk = static_cast<double>(k);

  std::vector<PointId> found;
  for (std::uint64_t round = 0; round < k && !pool.empty(); ++round) {
    std::optional<PointId> free_point;
    {
      PhaseScope ph(ledger, oracle, Phase::kScan);
      while (!pool.empty()) {
        const PointId p = pool.front();
        if (!set_dominates(found, p, delta / (4.0 * kk), delta / (4.0 * kk * nn),
                           oracle)) {
          free_point = p;  // stays in the pool for the tournament below
          break;
        }
        pool.erase(pool.begin());
      }
    }
    if (!free_point) break;

    PointId winner;
    {
      PhaseScope ph(ledger, oracle, Phase::kMaxLex);
      winner = max_lex(*free_point, pool, delta / (2.0 * kk), oracle);
    }
    found.push_back(winner);
    pool.erase(std::find(pool.begin(), pool.end(), winner));
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<PointId> skyline_high_dim(std::uint64_t k, const Instance& x, double delta,
                                      NoisyOracle& oracle, QueryLedger* ledger) {
  return skyline_high_dim_subset(k, x.all_ids(), delta, oracle, ledger);
}

std::vector<PointId> guess_skyline_high_dim(const Instance& x, double delta,
                                            NoisyOracle& oracle, QueryLedger* ledger) {
  require_delta_half(delta, "guess_skyline_high_dim");
  std::uint64_t k = 1;
  double round_budget = delta;
  std::vector<PointId> s;
  do {
    k *= 2;
    round_budget /= 8.0;
    s = skyline_high_dim(k, x, round_budget, oracle, ledger);
  } while (s.size() == k);
  return s;
}

namespace {

// Positions on one dimension's breakpoint line: value b_i sits at code 2i+1,
// so cell sup/inf comparisons reduce to integer comparisons on leaf indices.
std::int64_t leaf_inf_code(std::uint32_t t) {
  if (t == 0) return std::numeric_limits<std::int64_t>::min();
  return (t % 2 == 1) ? static_cast<std::int64_t>(t) : static_cast<std::int64_t>(t) - 1;
}

std::int64_t leaf_sup_code(std::uint32_t t, std::uint32_t last) {
  if (t == last) return std::numeric_limits<std::int64_t>::max();
  return (t % 2 == 1) ? static_cast<std::int64_t>(t) : static_cast<std::int64_t>(t) + 1;
}

// Does the bucket with key `a` dominate the bucket with key `b`?
bool key_dominates(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                   const std::vector<std::uint32_t>& last_leaf) {
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (leaf_sup_code(b[i], last_leaf[i]) > leaf_inf_code(a[i])) return false;
    if (a[i] != b[i]) differs = true;
  }
  return differs;
}

struct BucketEntry {
  std::vector<std::uint32_t> key;
  std::vector<PointId> members;
  Emptiness state = Emptiness::kUnknown;
  std::vector<std::size_t> dominators;  // indices of assigned dominating buckets
};

struct LowDimParams {
  std::uint64_t k = 0;
  double delta_prime = 0.0;
  std::uint64_t sample_size = 0;
  double restart_threshold = 0.0;
};

// One bucketing/elimination/reduction pass. nullopt requests a restart.
std::optional<std::vector<PointId>> low_dim_attempt(const LowDimParams& par,
                                                    const Instance& x,
                                                    NoisyOracle& oracle, Rng& sample_rng,
                                                    QueryLedger* ledger, LowDimDiag* diag) {
  const std::size_t n = x.size();
  const std::uint32_t d = x.dim();
  const double dp = par.delta_prime;

  // Phase (i): per-dimension sample, sort, dedupe; then place every point.
  std::vector<std::vector<PointId>> bps(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    std::vector<PointId> ids = x.all_ids();
    for (std::uint64_t j = 0; j < par.sample_size; ++j) {
      const std::uint64_t pick = j + sample_rng.next_below(n - j);
      std::swap(ids[j], ids[pick]);
    }
    ids.resize(par.sample_size);
    std::vector<PointId> sorted;
    {
      PhaseScope ph(ledger, oracle, Phase::kSort);
      sorted = noisy_sort(ids, i, dp / d, oracle);
    }
    {
      PhaseScope ph(ledger, oracle, Phase::kDedupe);
      bps[i] = dedupe_sorted(sorted, i, dp / d, oracle);
    }
  }

  std::map<std::vector<std::uint32_t>, std::vector<PointId>> assignment;
  std::vector<std::vector<std::uint32_t>> point_leaf(d,
      std::vector<std::uint32_t>(n, 0));
  {
    PhaseScope ph(ledger, oracle, Phase::kSearch);
    std::vector<std::uint32_t> key(d);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::uint32_t i = 0; i < d; ++i) {
        key[i] = noisy_search(static_cast<PointId>(p), i, bps[i],
                              dp / (d * static_cast<double>(par.k)), oracle)
                     .leaf;
        point_leaf[i][p] = key[i];
      }
      assignment[key].push_back(static_cast<PointId>(p));
    }
  }
  if (diag) {
    diag->breakpoints = bps;
    diag->point_leaf = point_leaf;
    diag->tested_buckets.clear();
    diag->reduced_ids.clear();
  }

  // Phase (ii): test buckets whose dominating buckets are all known empty.
  // Unassigned buckets are empty by construction, so only assigned buckets
  // appear here and "dominators" means assigned dominators.
  std::vector<BucketEntry> buckets;
  buckets.reserve(assignment.size());
  for (auto& [key, members] : assignment) {
    buckets.push_back({key, std::move(members), Emptiness::kUnknown, {}});
  }
  std::vector<std::uint32_t> last_leaf(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    last_leaf[i] = static_cast<std::uint32_t>(2 * bps[i].size());
  }
  for (std::size_t a = 0; a < buckets.size(); ++a) {
    for (std::size_t b = 0; b < buckets.size(); ++b) {
      if (a != b && key_dominates(buckets[a].key, buckets[b].key, last_leaf)) {
        buckets[b].dominators.push_back(a);
      }
    }
  }

  std::size_t nonempty = 0;
  for (;;) {
    // Highest eligible bucket first (keys descend along dominance).
    std::size_t pick = SIZE_MAX;
    for (std::size_t b = 0; b < buckets.size(); ++b) {
      if (buckets[b].state != Emptiness::kUnknown) continue;
      bool ready = true;
      for (const std::size_t dom : buckets[b].dominators) {
        if (buckets[dom].state != Emptiness::kEmpty) { ready = false; break; }
      }
      if (!ready) continue;
      if (pick == SIZE_MAX || buckets[b].key > buckets[pick].key) pick = b;
    }
    if (pick == SIZE_MAX) break;

    BucketEntry& bucket = buckets[pick];
    std::vector<NoisyCell> cells(d);
    for (std::uint32_t i = 0; i < d; ++i) cells[i] = {bps[i], bucket.key[i]};
    bool empty;
    {
      PhaseScope ph(ledger, oracle, Phase::kEliminate);
      empty = is_empty(cells, bucket.members, dp / static_cast<double>(par.k),
                       dp / static_cast<double>(n), oracle);
    }
    bucket.state = empty ? Emptiness::kEmpty : Emptiness::kNonEmpty;
    if (diag) diag->tested_buckets.push_back(bucket.key);
    if (!empty && static_cast<double>(++nonempty) > par.restart_threshold) {
      return std::nullopt;
    }
  }

  // Confirmed-nonempty buckets were only ever tested with every dominator
  // already known empty, so their members are exactly the reduced problem.
  std::vector<PointId> reduced;
  for (const BucketEntry& b : buckets) {
    if (b.state == Emptiness::kNonEmpty) {
      reduced.insert(reduced.end(), b.members.begin(), b.members.end());
    }
  }
  std::sort(reduced.begin(), reduced.end());
  if (diag) diag->reduced_ids = reduced;

  // Phase (iii): solve the reduced problem.
  return skyline_high_dim_subset(par.k, reduced, dp, oracle, ledger);
}

}  // namespace

std::vector<PointId> skyline_low_dim(std::uint64_t k, const Instance& x, double delta,
                                     const AlgoConfig& cfg, NoisyOracle& oracle,
                                     QueryLedger* ledger, LowDimDiag* diag) {
  if (k < 1) throw std::invalid_argument("skyline_low_dim: k must be >= 1");
  require_delta_half(delta, "skyline_low_dim");
  const std::size_t n = x.size();
  const std::uint32_t d = x.dim();
  const double kd = static_cast<double>(k);
  const double delta_prime = delta / std::pow(2.0 * d * kd, 5.0);

  if (!cfg.test_mode &&
      (std::pow(kd, cfg.guard_exponent) >= static_cast<double>(n) ||
       std::pow(static_cast<double>(d), cfg.guard_exponent) >= static_cast<double>(n))) {
    if (diag) diag->guard_fired = true;
    PhaseScope ph(ledger, oracle, Phase::kFallback);
    return sky_gm(x, delta_prime, oracle, nullptr);
  }

  LowDimParams par;
  par.k = k;
  par.delta_prime = delta_prime;
  const double s_formula =
      std::ceil(static_cast<double>(d) * kd * kd *
                std::log2(static_cast<double>(d) * d * kd * kd / delta_prime));
  std::uint64_t s = (cfg.test_mode && cfg.test_mode->sample_size > 0)
                        ? cfg.test_mode->sample_size
                        : static_cast<std::uint64_t>(s_formula);
  par.sample_size = std::min<std::uint64_t>(s, n);
  par.restart_threshold =
      static_cast<double>(n) / std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
  if (diag) diag->sample_size = par.sample_size;

  for (int attempt = 0; attempt <= cfg.restart_cap; ++attempt) {
    Rng sample_rng(derive_seed(oracle.seed(), kLowDimSampleSalt + attempt));
    auto result = low_dim_attempt(par, x, oracle, sample_rng, ledger, diag);
    if (result) return *result;
    if (diag) ++diag->restarts;
  }

  if (diag) diag->fell_back = true;
  PhaseScope ph(ledger, oracle, Phase::kFallback);
  return sky_gm(x, delta_prime, oracle, nullptr);
}

std::vector<PointId> guess_skyline_low_dim(const Instance& x, double delta,
                                           const AlgoConfig& cfg, NoisyOracle& oracle,
                                           QueryLedger* ledger) {
  require_delta_half(delta, "guess_skyline_low_dim");
  std::uint64_t k;
  if (cfg.test_mode && cfg.test_mode->initial_k > 0) {
    k = cfg.test_mode->initial_k;
  } else {
    std::uint64_t base = static_cast<std::uint64_t>(std::floor(x.dim() / delta));
    if (base < 2) base = 2;  // degenerate start
    k = base * base;
  }
  k = std::min(k, kGuessCap);

  double budget = delta;
  std::vector<PointId> s;
  do {
    budget /= 2.0;
    k = std::min(k * k, kGuessCap);
    s = skyline_low_dim(k, x, budget, cfg, oracle, ledger);
  } while (s.size() == k);
  return s;
}

}  // namespace nsky
