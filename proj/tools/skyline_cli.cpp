// Command-line front end: generate instances, run one algorithm on an
// instance file, sweep a parameter grid to CSV, or brute-force verify.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nsky/generators.hpp"
#include "nsky/harness.hpp"
#include "nsky/instance_io.hpp"

namespace {

double parse_prob(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return std::stod(s);
  return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noisy-comparison skyline toolkit"};
  app.require_subcommand(1);

  // --- gen -----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate an instance (or null-vectors input) as JSON");
  std::string gen_family = "uniform";
  std::uint32_t gen_n = 64, gen_d = 2, gen_k = 4, gen_l = 16;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--family", gen_family,
                  "uniform | fixed | nullvec | nullvec-reduce")->capture_default_str();
  gen->add_option("--n", gen_n, "point count (uniform, fixed)")->capture_default_str();
  gen->add_option("--d", gen_d, "dimension")->capture_default_str();
  gen->add_option("--k", gen_k, "skyline size (fixed) / vector count (nullvec*)")
      ->capture_default_str();
  gen->add_option("--l", gen_l, "vector length (nullvec*)")->capture_default_str();
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "output path (stdout when omitted)");

  // --- run -----------------------------------------------------------
  auto* run = app.add_subcommand("run", "Run one algorithm on an instance file");
  std::string run_algo, run_instance, run_flip = "1/3";
  double run_delta = 0.1;
  std::uint32_t run_k = 0;
  std::uint64_t run_seed = 0;
  run->add_option("--algo", run_algo,
                  "sky_gm | skyline_high_dim | guess_skyline_high_dim | skyline_low_dim | "
                  "skyline_low_dim_test | guess_skyline_low_dim | guess_skyline_low_dim_test")
      ->required();
  run->add_option("--instance", run_instance, "instance JSON path")->required();
  run->add_option("--delta", run_delta, "target error probability")->capture_default_str();
  run->add_option("--flip-prob", run_flip, "oracle flip probability (accepts p/q)")
      ->capture_default_str();
  run->add_option("--k", run_k, "skyline-size bound (0 = instance's true size)")
      ->capture_default_str();
  run->add_option("--seed", run_seed, "oracle seed")->capture_default_str();

  // --- sweep ---------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep from a config file");
  std::string sweep_config;
  std::string sweep_out_dir;
  sweep->add_option("--config", sweep_config, "flat key = value config file")->required();
  sweep->add_option("--out-dir", sweep_out_dir, "override the config's out_dir");

  // --- verify --------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Brute-force skyline of an instance file");
  std::string verify_instance;
  verify->add_option("--instance", verify_instance, "instance JSON path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      std::string text;
      if (gen_family == "uniform") {
        text = nsky::instance_to_json(nsky::gen_uniform(gen_n, gen_d, gen_seed));
      } else if (gen_family == "fixed") {
        text = nsky::instance_to_json(nsky::gen_fixed_skyline(gen_n, gen_d, gen_k, gen_seed));
      } else if (gen_family == "nullvec") {
        text = nsky::null_vectors_to_json(nsky::gen_null_vectors(gen_k, gen_l, gen_seed));
      } else if (gen_family == "nullvec-reduce") {
        const auto s = nsky::gen_null_vectors(gen_k, gen_l, gen_seed);
        text = nsky::instance_to_json(
            nsky::reduce_to_skyline(s, gen_d, nsky::derive_seed(gen_seed, 1)));
      } else {
        throw std::invalid_argument("unknown family: " + gen_family);
      }
      if (gen_out.empty()) {
        std::cout << text << '\n';
      } else {
        std::ofstream out(gen_out);
        if (!out) throw std::runtime_error("cannot write " + gen_out);
        out << text << '\n';
      }
    } else if (*run) {
      const nsky::Instance x = nsky::read_instance(run_instance);
      nsky::SweepCell cell;
      cell.algorithm = run_algo;
      cell.n = static_cast<std::uint32_t>(x.size());
      cell.d = x.dim();
      cell.k = run_k;
      cell.delta = run_delta;
      cell.flip_prob = parse_prob(run_flip);
      nsky::TrialRecord rec = nsky::run_on_instance(cell, x, run_seed);
      rec.master_seed = run_seed;
      std::cout << nsky::trial_record_to_json(rec) << '\n';
      if (!rec.error.empty()) {
        std::cerr << "error: " << rec.error << '\n';
        return 1;
      }
    } else if (*sweep) {
      nsky::SweepSpec spec = nsky::SweepSpec::parse_file(sweep_config);
      if (!sweep_out_dir.empty()) spec.out_dir = sweep_out_dir;
      std::filesystem::create_directories(spec.out_dir);
      const nsky::SweepResult result = nsky::run_sweep(spec);
      const auto trials_path = spec.out_dir + "/trials.csv";
      const auto summary_path = spec.out_dir + "/summary.csv";
      std::ofstream trials(trials_path);
      std::ofstream summary(summary_path);
      if (!trials || !summary) {
        throw std::runtime_error("cannot write CSVs under " + spec.out_dir);
      }
      nsky::write_trials_csv(trials, result.trials);
      nsky::write_summary_csv(summary, result.summaries);
      std::cout << "wrote " << trials_path << " and " << summary_path << '\n';
    } else if (*verify) {
      const nsky::Instance x = nsky::read_instance(verify_instance);
      const auto sky = nsky::skyline_exact(x);
      for (std::size_t i = 0; i < sky.size(); ++i) {
        std::cout << sky[i] << (i + 1 < sky.size() ? ' ' : '\n');
      }
      if (sky.empty()) std::cout << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
