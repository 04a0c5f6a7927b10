#include "nsky/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "nsky/generators.hpp"
#include "nsky/oracle.hpp"
#include "nsky/rng.hpp"
#include "nsky/stats.hpp"

namespace nsky {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_ratio(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return std::stod(s);
  return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
}

std::vector<std::uint32_t> parse_u32_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return out;
}

std::vector<PointId> dispatch(const SweepCell& cell, const Instance& x,
                              std::uint32_t true_k, NoisyOracle& oracle,
                              QueryLedger& ledger) {
  const std::uint64_t k = cell.k > 0 ? cell.k : std::max<std::uint32_t>(true_k, 1);
  const std::string& a = cell.algorithm;
  AlgoConfig cfg;
  if (a == "sky_gm") return sky_gm(x, cell.delta, oracle, &ledger);
  if (a == "skyline_high_dim") {
    return skyline_high_dim(k, x, cell.delta, oracle, &ledger);
  }
  if (a == "guess_skyline_high_dim") {
    return guess_skyline_high_dim(x, cell.delta, oracle, &ledger);
  }
  if (a == "skyline_low_dim") {
    return skyline_low_dim(k, x, cell.delta, cfg, oracle, &ledger);
  }
  if (a == "skyline_low_dim_test") {
    cfg.test_mode = TestModeConstants{};
    return skyline_low_dim(k, x, cell.delta, cfg, oracle, &ledger);
  }
  if (a == "guess_skyline_low_dim") {
    return guess_skyline_low_dim(x, cell.delta, cfg, oracle, &ledger);
  }
  if (a == "guess_skyline_low_dim_test") {
    cfg.test_mode = TestModeConstants{};
    return guess_skyline_low_dim(x, cell.delta, cfg, oracle, &ledger);
  }
  throw std::invalid_argument("unknown algorithm: " + a);
}

}  // namespace

std::vector<SweepCell> SweepSpec::cells() const {
  std::vector<SweepCell> out;
  for (const auto n : n_list) {
    for (const auto d : d_list) {
      for (const auto k : k_list) {
        out.push_back({algorithm, family, n, d, k, delta, flip_prob});
      }
    }
  }
  return out;
}

SweepSpec SweepSpec::parse(std::istream& in) {
  SweepSpec spec;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("sweep config: expected key = value, got: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "algorithm") spec.algorithm = val;
    else if (key == "family") spec.family = val;
    else if (key == "n") spec.n_list = parse_u32_list(val);
    else if (key == "d") spec.d_list = parse_u32_list(val);
    else if (key == "k") spec.k_list = parse_u32_list(val);
    else if (key == "delta") spec.delta = parse_ratio(val);
    else if (key == "flip_prob") spec.flip_prob = parse_ratio(val);
    else if (key == "trials") spec.trials = static_cast<std::uint32_t>(std::stoul(val));
    else if (key == "master_seed") spec.master_seed = std::stoull(val);
    else if (key == "jobs") spec.jobs = static_cast<std::uint32_t>(std::stoul(val));
    else if (key == "out_dir") spec.out_dir = val;
    else throw std::invalid_argument("sweep config: unknown key: " + key);
  }
  if (spec.algorithm.empty()) throw std::invalid_argument("sweep config: algorithm missing");
  if (spec.n_list.empty() || spec.d_list.empty()) {
    throw std::invalid_argument("sweep config: n and d lists must be nonempty");
  }
  return spec;
}

SweepSpec SweepSpec::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in);
}

Instance make_instance(const SweepCell& cell, std::uint64_t instance_seed) {
  if (cell.family == "uniform") return gen_uniform(cell.n, cell.d, instance_seed);
  if (cell.family == "fixed") {
    if (cell.k < 1) throw std::invalid_argument("family 'fixed' needs k >= 1");
    return gen_fixed_skyline(cell.n, cell.d, cell.k, instance_seed);
  }
  throw std::invalid_argument("unknown instance family: " + cell.family);
}

TrialRecord run_on_instance(const SweepCell& cell, const Instance& x,
                            std::uint64_t oracle_seed) {
  TrialRecord rec;
  rec.algorithm = cell.algorithm;
  rec.n = static_cast<std::uint32_t>(x.size());
  rec.d = x.dim();
  rec.delta = cell.delta;
  rec.flip_prob = cell.flip_prob;

  const std::vector<PointId> truth =
      (x.meta() && x.meta()->skyline) ? *x.meta()->skyline : skyline_exact(x);
  rec.true_k = static_cast<std::uint32_t>(truth.size());

  NoisyOracle oracle(x, cell.flip_prob, oracle_seed);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<PointId> out;
  try {
    out = dispatch(cell, x, rec.true_k, oracle, rec.phases);
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  rec.wall_millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  rec.queries_total = oracle.snapshot_queries();
  rec.correct = rec.error.empty() && out == truth;
  return rec;
}

TrialRecord run_trial(const SweepCell& cell, std::uint64_t master_seed,
                      std::uint32_t trial_index) {
  const std::uint64_t trial_seed = derive_seed(master_seed, trial_index);
  const Instance x = make_instance(cell, derive_seed(trial_seed, 0));
  TrialRecord rec = run_on_instance(cell, x, derive_seed(trial_seed, 1));
  rec.master_seed = master_seed;
  rec.trial_index = trial_index;
  return rec;
}

SweepResult run_sweep(const SweepSpec& spec) {
  const std::vector<SweepCell> cells = spec.cells();
  SweepResult result;
  result.trials.resize(cells.size() * spec.trials);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= result.trials.size()) return;
      const std::size_t cell_idx = slot / spec.trials;
      const auto trial = static_cast<std::uint32_t>(slot % spec.trials);
      result.trials[slot] = run_trial(cells[cell_idx], spec.master_seed, trial);
    }
  };
  const std::uint32_t jobs = std::max<std::uint32_t>(spec.jobs, 1);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::uint32_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  result.summaries = summarize(spec, result.trials);
  return result;
}

std::vector<CellSummary> summarize(const SweepSpec& spec,
                                   const std::vector<TrialRecord>& trials) {
  const std::vector<SweepCell> cells = spec.cells();
  std::vector<CellSummary> out;
  out.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    CellSummary s;
    s.cell = cells[c];
    s.trials = spec.trials;
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint32_t t = 0; t < spec.trials; ++t) {
      const TrialRecord& rec = trials[c * spec.trials + t];
      if (rec.correct) ++s.successes;
      const auto q = static_cast<double>(rec.queries_total);
      sum += q;
      sum_sq += q * q;
    }
    if (spec.trials > 0) {
      s.success_rate = static_cast<double>(s.successes) / spec.trials;
      s.mean_queries = sum / spec.trials;
      const double var =
          spec.trials > 1
              ? std::max(0.0, (sum_sq - sum * sum / spec.trials) / (spec.trials - 1))
              : 0.0;
      s.stddev_queries = std::sqrt(var);
      const BinomCI ci = clopper_pearson(s.successes, spec.trials);
      s.ci95_lo = ci.lo;
      s.ci95_hi = ci.hi;
    }
    out.push_back(s);
  }
  return out;
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& trials) {
  out << "algorithm,master_seed,trial,n,d,true_k,delta,flip_prob,queries,correct,"
         "wall_ms,q_sort,q_dedupe,q_search,q_eliminate,q_scan,q_maxlex,q_fallback\n";
  for (const TrialRecord& r : trials) {
    out << r.algorithm << ',' << r.master_seed << ',' << r.trial_index << ',' << r.n
        << ',' << r.d << ',' << r.true_k << ',' << fmt_double(r.delta) << ','
        << fmt_double(r.flip_prob) << ',' << r.queries_total << ','
        << (r.correct ? 1 : 0) << ',' << fmt_double(r.wall_millis);
    for (std::size_t ph = 0; ph < static_cast<std::size_t>(Phase::kCount); ++ph) {
      out << ',' << r.phases.by_phase[ph];
    }
    out << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summaries) {
  out << "algorithm,family,n,d,k,delta,flip_prob,trials,successes,success_rate,"
         "ci95_lo,ci95_hi,mean_queries,stddev_queries\n";
  for (const CellSummary& s : summaries) {
    out << s.cell.algorithm << ',' << s.cell.family << ',' << s.cell.n << ','
        << s.cell.d << ',' << s.cell.k << ',' << fmt_double(s.cell.delta) << ','
        << fmt_double(s.cell.flip_prob) << ',' << s.trials << ',' << s.successes
        << ',' << fmt_double(s.success_rate) << ',' << fmt_double(s.ci95_lo) << ','
        << fmt_double(s.ci95_hi) << ',' << fmt_double(s.mean_queries) << ','
        << fmt_double(s.stddev_queries) << '\n';
  }
}

std::string trial_record_to_json(const TrialRecord& rec) {
  nlohmann::ordered_json j;
  j["algorithm"] = rec.algorithm;
  j["master_seed"] = rec.master_seed;
  j["trial"] = rec.trial_index;
  j["n"] = rec.n;
  j["d"] = rec.d;
  j["true_k"] = rec.true_k;
  j["delta"] = rec.delta;
  j["flip_prob"] = rec.flip_prob;
  j["queries"] = rec.queries_total;
  j["correct"] = rec.correct;
  j["wall_ms"] = rec.wall_millis;
  nlohmann::ordered_json phases;
  for (std::size_t ph = 0; ph < static_cast<std::size_t>(Phase::kCount); ++ph) {
    phases[phase_name(static_cast<Phase>(ph))] = rec.phases.by_phase[ph];
  }
  j["queries_per_phase"] = std::move(phases);
  if (!rec.error.empty()) j["error"] = rec.error;
  return j.dump(2);
}

}  // namespace nsky
