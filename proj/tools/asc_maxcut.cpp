// asc-maxcut: experiment harness for measuring the information content of
// greedy MaxCut algorithms under noisy instance pairs.
//
//   run     sweep noise levels, write curves.csv and content.csv
//   verify  cross-check the exact counting formulas against enumeration
//   gen     write a master graph and an example noisy instance pair

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "maxcut/experiment.hpp"
#include "maxcut/graph.hpp"
#include "maxcut/noise.hpp"
#include "maxcut/rng.hpp"
#include "maxcut/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

struct RunOptions {
  std::string model = "edge-reversal";
  int n = 100;
  int trials = 1000;
  std::vector<double> grid;
  std::vector<std::string> algos;
  std::uint64_t seed = 1;
  std::string mode = "meanlog";
  int workers = 0;
  std::string out_dir = "results";
  double p_m = 0.2;
  double mu = 600.0;
  double sigma_m = 50.0;
  bool resample_master = false;
  bool share_rd_seed = false;
};

maxcut::NoiseModel parse_model(const std::string& name) {
  if (name == "edge-reversal") return maxcut::NoiseModel::EdgeReversal;
  if (name == "gaussian") return maxcut::NoiseModel::GaussianWeights;
  throw CLI::ValidationError("--model", "must be 'edge-reversal' or 'gaussian'");
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<double> split_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(std::stod(trim(item)));
  return out;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(trim(item));
  return out;
}

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw std::invalid_argument("bad boolean value: " + v);
}

// Flat key=value config; '#' starts a comment. Keys are the run option
// names. Values given on the command line take precedence.
void apply_config_file(const std::string& path, const CLI::App& run,
                       RunOptions& opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    static const std::set<std::string> known = {
        "model", "n",   "trials",  "grid", "algos",   "seed",
        "mode",  "workers", "out", "pm",   "mu",      "sigma-m",
        "resample-master", "share-rd-seed"};
    if (!known.count(key))
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": unknown key '" + key + "'");
    const bool overridden = run.count("--" + key) > 0;

    if (key == "model") {
      if (!overridden) opt.model = value;
    } else if (key == "n") {
      if (!overridden) opt.n = std::stoi(value);
    } else if (key == "trials") {
      if (!overridden) opt.trials = std::stoi(value);
    } else if (key == "grid") {
      if (!overridden) opt.grid = split_doubles(value);
    } else if (key == "algos") {
      if (!overridden) opt.algos = split_names(value);
    } else if (key == "seed") {
      if (!overridden) opt.seed = std::stoull(value);
    } else if (key == "mode") {
      if (!overridden) opt.mode = value;
    } else if (key == "workers") {
      if (!overridden) opt.workers = std::stoi(value);
    } else if (key == "out") {
      if (!overridden) opt.out_dir = value;
    } else if (key == "pm") {
      if (!overridden) opt.p_m = std::stod(value);
    } else if (key == "mu") {
      if (!overridden) opt.mu = std::stod(value);
    } else if (key == "sigma-m") {
      if (!overridden) opt.sigma_m = std::stod(value);
    } else if (key == "resample-master") {
      if (!overridden) opt.resample_master = parse_bool(value);
    } else if (key == "share-rd-seed") {
      if (!overridden) opt.share_rd_seed = parse_bool(value);
    }
  }
}

std::vector<double> default_grid(maxcut::NoiseModel model) {
  std::vector<double> grid;
  if (model == maxcut::NoiseModel::EdgeReversal) {
    for (int i = 0; i <= 20; ++i) grid.push_back(i * 0.05);
  } else {
    for (int i = 0; i <= 12; ++i) grid.push_back(i * 25.0);
  }
  return grid;
}

maxcut::ExperimentConfig build_config(const RunOptions& opt) {
  maxcut::ExperimentConfig cfg;
  cfg.model.model = parse_model(opt.model);
  cfg.model.flip_master = opt.p_m;
  cfg.model.mean = opt.mu;
  cfg.model.sigma_master = opt.sigma_m;
  cfg.n = opt.n;
  cfg.trials = opt.trials;
  cfg.noise_grid = opt.grid.empty() ? default_grid(cfg.model.model) : opt.grid;
  cfg.master_seed = opt.seed;
  cfg.mode = maxcut::estimator_mode_from_name(opt.mode);
  cfg.workers = opt.workers > 0
                    ? opt.workers
                    : std::max(1u, std::thread::hardware_concurrency());
  cfg.resample_master = opt.resample_master;
  cfg.share_rd_seed = opt.share_rd_seed;
  if (!opt.algos.empty()) {
    cfg.algorithms.clear();
    for (const auto& name : opt.algos)
      cfg.algorithms.push_back(maxcut::algorithm_from_name(name));
  }
  return cfg;
}

int cmd_run(const RunOptions& opt) {
  const auto cfg = build_config(opt);
  cfg.validate();
  const auto result = maxcut::run_asc_experiment(cfg);

  // Render both tables before touching the filesystem so a failed sweep or
  // write never leaves partial results behind.
  const std::string curves = maxcut::curves_csv(result);
  const std::string content = maxcut::content_csv(result);
  namespace fs = std::filesystem;
  const fs::path dir(opt.out_dir);
  maxcut::write_file_atomic(curves, (dir / "curves.csv").string());
  maxcut::write_file_atomic(content, (dir / "content.csv").string());

  std::printf("model=%s n=%d trials=%d levels=%zu algorithms=%zu workers=%d\n",
              opt.model.c_str(), cfg.n, cfg.trials, cfg.noise_grid.size(),
              cfg.algorithms.size(), cfg.workers);
  for (const auto& level : result.levels) {
    for (const auto& curve : level.curves) {
      const auto& point = curve.content(cfg.mode);
      std::printf("  %-9s %s=%-8g I=%-12g t*=%d (%s)\n",
                  std::string(maxcut::algorithm_name(curve.algorithm)).c_str(),
                  cfg.model.model == maxcut::NoiseModel::EdgeReversal ? "p"
                                                                      : "sigma",
                  curve.noise_param, point.defined ? point.value : NAN,
                  point.defined ? point.t_star : -1,
                  std::string(maxcut::estimator_mode_name(cfg.mode)).c_str());
    }
  }
  std::printf("wrote %s and %s\n", (dir / "curves.csv").string().c_str(),
              (dir / "content.csv").string().c_str());
  return kExitOk;
}

int cmd_verify(int n_max, int trials, std::uint64_t seed) {
  using maxcut::SuiteReport;
  const std::vector<SuiteReport> reports = {
      maxcut::verify_counting(3, n_max, trials, seed),
      maxcut::verify_common_supervertex(trials, 8, seed + 1),
      maxcut::verify_sg_d2_identity(trials, 20, seed + 2),
  };

  bool all_passed = true;
  for (const auto& report : reports) {
    std::printf("%-36s %ld/%ld checks passed%s\n", report.name.c_str(),
                report.checks - report.failures, report.checks,
                report.passed() ? "" : "  [FAILED]");
    for (const auto& example : report.examples)
      std::printf("    %s\n", example.c_str());
    all_passed = all_passed && report.passed();
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information content of greedy MaxCut algorithms"};
  app.require_subcommand(1);

  RunOptions run_opt;
  std::string config_path;
  auto* run = app.add_subcommand("run", "run a noise sweep and write CSVs");
  run->add_option("--config", config_path, "flat key=value config file");
  run->add_option("--model", run_opt.model, "edge-reversal or gaussian")
      ->capture_default_str();
  run->add_option("--n", run_opt.n, "vertex count")->capture_default_str();
  run->add_option("--trials", run_opt.trials, "instance pairs per noise level")
      ->capture_default_str();
  run->add_option("--grid", run_opt.grid,
                  "noise levels (p values or sigma values)")
      ->delimiter(',');
  run->add_option("--algos", run_opt.algos,
                  "subset of d2greedy,rdgreedy,sg,sg3,ec")
      ->delimiter(',');
  run->add_option("--seed", run_opt.seed, "master seed")->capture_default_str();
  run->add_option("--mode", run_opt.mode, "default estimator: meanlog or logmean")
      ->capture_default_str();
  run->add_option("--workers", run_opt.workers,
                  "worker threads (0 = hardware concurrency)");
  run->add_option("--out", run_opt.out_dir, "output directory")
      ->capture_default_str();
  run->add_option("--pm", run_opt.p_m, "master flip probability")
      ->capture_default_str();
  run->add_option("--mu", run_opt.mu, "Gaussian master mean")
      ->capture_default_str();
  run->add_option("--sigma-m", run_opt.sigma_m, "Gaussian master std-dev")
      ->capture_default_str();
  run->add_flag("--resample-master", run_opt.resample_master,
                "draw a fresh master graph per trial");
  run->add_flag("--share-rd-seed", run_opt.share_rd_seed,
                "RDGreedy uses the same stream on G' and G''");

  int verify_nmax = 8;
  int verify_trials = 200;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand(
      "verify", "cross-check exact counting against brute-force enumeration");
  verify->add_option("--nmax", verify_nmax, "largest n (<= 16)")
      ->check(CLI::Range(3, 16))
      ->capture_default_str();
  verify->add_option("--trials", verify_trials, "checks per suite")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "seed")->capture_default_str();

  RunOptions gen_opt;
  double gen_noise = -1.0;
  std::string gen_out = "graphs";
  auto* gen = app.add_subcommand("gen", "write master + noisy instance pair");
  gen->add_option("--model", gen_opt.model, "edge-reversal or gaussian")
      ->capture_default_str();
  gen->add_option("--n", gen_opt.n, "vertex count")->capture_default_str();
  gen->add_option("--seed", gen_opt.seed, "seed")->capture_default_str();
  gen->add_option("--pm", gen_opt.p_m, "master flip probability")
      ->capture_default_str();
  gen->add_option("--mu", gen_opt.mu, "Gaussian master mean")
      ->capture_default_str();
  gen->add_option("--sigma-m", gen_opt.sigma_m, "Gaussian master std-dev")
      ->capture_default_str();
  gen->add_option("--noise", gen_noise,
                  "instance noise (p or sigma; default 0.2 / 125)");
  gen->add_option("--out", gen_out, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) {
      if (!config_path.empty()) apply_config_file(config_path, *run, run_opt);
      return cmd_run(run_opt);
    }
    if (verify->parsed()) return cmd_verify(verify_nmax, verify_trials, verify_seed);
    if (gen->parsed()) {
      maxcut::NoiseModelConfig model;
      model.model = parse_model(gen_opt.model);
      model.flip_master = gen_opt.p_m;
      model.mean = gen_opt.mu;
      model.sigma_master = gen_opt.sigma_m;
      model.validate();
      const double noise =
          gen_noise >= 0.0
              ? gen_noise
              : (model.model == maxcut::NoiseModel::EdgeReversal ? 0.2 : 125.0);

      const auto master = maxcut::gen_master(
          model, gen_opt.n, maxcut::derive_seed(gen_opt.seed, {1}));
      const auto g1 = maxcut::apply_instance_noise(
          model, master, noise, maxcut::derive_seed(gen_opt.seed, {2, 0}));
      const auto g2 = maxcut::apply_instance_noise(
          model, master, noise, maxcut::derive_seed(gen_opt.seed, {2, 1}));

      namespace fs = std::filesystem;
      fs::create_directories(gen_out);
      maxcut::save_graph(master, fs::path(gen_out) / "master.graph");
      maxcut::save_graph(g1, fs::path(gen_out) / "noisy_a.graph");
      maxcut::save_graph(g2, fs::path(gen_out) / "noisy_b.graph");
      std::printf("wrote master.graph, noisy_a.graph, noisy_b.graph to %s\n",
                  gen_out.c_str());
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
