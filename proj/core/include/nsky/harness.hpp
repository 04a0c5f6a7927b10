#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nsky/algorithms.hpp"
#include "nsky/geometry.hpp"

namespace nsky {

// Algorithm names the harness dispatches on:
//   sky_gm, skyline_high_dim, guess_skyline_high_dim,
//   skyline_low_dim, skyline_low_dim_test, guess_skyline_low_dim,
//   guess_skyline_low_dim_test
// The *_test variants run with the bucketing test-mode overrides.
// Instance families: uniform, fixed.
struct SweepCell {
  std::string algorithm;
  std::string family = "uniform";
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint32_t k = 0;  // family parameter; 0 lets k-taking algorithms use the true size
  double delta = 0.1;
  double flip_prob = 1.0 / 3.0;
};

struct TrialRecord {
  std::string algorithm;
  std::uint64_t master_seed = 0;
  std::uint32_t trial_index = 0;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint32_t true_k = 0;
  double delta = 0.0;
  double flip_prob = 0.0;
  std::uint64_t queries_total = 0;
  QueryLedger phases;
  bool correct = false;
  double wall_millis = 0.0;
  std::string error;  // nonempty when the algorithm raised a contract violation
};

struct SweepSpec {
  std::string algorithm;
  std::string family = "uniform";
  std::vector<std::uint32_t> n_list;
  std::vector<std::uint32_t> d_list;
  std::vector<std::uint32_t> k_list{0};
  double delta = 0.1;
  double flip_prob = 1.0 / 3.0;
  std::uint32_t trials = 10;
  std::uint64_t master_seed = 0;
  std::uint32_t jobs = 1;
  std::string out_dir = ".";

  std::vector<SweepCell> cells() const;

  // Flat key/value config: one `key = value` per line, '#' comments,
  // comma-separated lists for n/d/k, and p/q fractions accepted for
  // delta/flip_prob so 1/3 stays exact.
  static SweepSpec parse(std::istream& in);
  static SweepSpec parse_file(const std::string& path);
};

// Per-cell aggregate over its trials.
struct CellSummary {
  SweepCell cell;
  std::uint32_t trials = 0;
  std::uint32_t successes = 0;
  double success_rate = 0.0;
  double ci95_lo = 0.0;
  double ci95_hi = 1.0;
  double mean_queries = 0.0;
  double stddev_queries = 0.0;
};

// Seeds: trial_seed = derive_seed(master_seed, trial_index), then
// instance_seed = derive_seed(trial_seed, 0) and
// oracle_seed = derive_seed(trial_seed, 1).
Instance make_instance(const SweepCell& cell, std::uint64_t instance_seed);
TrialRecord run_trial(const SweepCell& cell, std::uint64_t master_seed,
                      std::uint32_t trial_index);

// Run the algorithm named in `cell` on a caller-supplied instance.
TrialRecord run_on_instance(const SweepCell& cell, const Instance& x,
                            std::uint64_t oracle_seed);

struct SweepResult {
  std::vector<TrialRecord> trials;      // cell-major, trial order within cells
  std::vector<CellSummary> summaries;   // one per cell
};

// Deterministic for a given spec regardless of jobs; trials within a sweep
// may run concurrently since each owns its oracle and instance.
SweepResult run_sweep(const SweepSpec& spec);

std::vector<CellSummary> summarize(const SweepSpec& spec,
                                   const std::vector<TrialRecord>& trials);

// CSV schema (fixed order): algorithm,master_seed,trial,n,d,true_k,delta,
// flip_prob,queries,correct,wall_ms,q_sort,q_dedupe,q_search,q_eliminate,
// q_scan,q_maxlex,q_fallback
void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& trials);
void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summaries);

std::string trial_record_to_json(const TrialRecord& rec);

}  // namespace nsky
