#include "maxcut/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "maxcut/rng.hpp"

namespace maxcut {

namespace {

// Stream tags for seed derivation; path layout is
// (tag, noise level index, trial, instance).
constexpr std::uint64_t kTagMaster = 1;
constexpr std::uint64_t kTagInstance = 2;
constexpr std::uint64_t kTagRdGreedy = 3;

int steps_for(Algorithm alg, int n) {
  switch (alg) {
    case Algorithm::D2Greedy:
    case Algorithm::RDGreedy: return n;
    case Algorithm::SG:
    case Algorithm::SG3: return n - 1;
    case Algorithm::EC: return n - 2;
  }
  return 0;
}

// One trial's reduced contribution: per algorithm, per step.
struct TrialResult {
  std::vector<std::vector<LogRatioSample>> per_algorithm;
  double equal_fraction = 0.0;
};

std::vector<LogRatioSample> compress_all(
    const std::vector<CardinalitySample>& samples) {
  std::vector<LogRatioSample> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(compress_sample(s));
  return out;
}

TrialResult run_trial(const ExperimentConfig& cfg, const WeightedGraph& master,
                      std::size_t level_idx, double noise_param, int trial) {
  const auto instance_seed = [&](std::uint64_t instance) {
    return derive_seed(cfg.master_seed,
                       {kTagInstance, level_idx, static_cast<std::uint64_t>(trial),
                        instance});
  };
  const WeightedGraph g1 =
      apply_instance_noise(cfg.model, master, noise_param, instance_seed(0));
  const WeightedGraph g2 =
      apply_instance_noise(cfg.model, master, noise_param, instance_seed(1));

  TrialResult result;
  result.per_algorithm.reserve(cfg.algorithms.size());
  for (Algorithm alg : cfg.algorithms) {
    switch (alg) {
      case Algorithm::D2Greedy:
        result.per_algorithm.push_back(compress_all(
            trace_pair_samples(run_d2greedy(g1), run_d2greedy(g2), trial)));
        break;
      case Algorithm::RDGreedy: {
        const std::uint64_t s1 = derive_seed(
            cfg.master_seed, {kTagRdGreedy, level_idx,
                              static_cast<std::uint64_t>(trial), 0});
        const std::uint64_t s2 =
            cfg.share_rd_seed
                ? s1
                : derive_seed(cfg.master_seed,
                              {kTagRdGreedy, level_idx,
                               static_cast<std::uint64_t>(trial), 1});
        result.per_algorithm.push_back(compress_all(trace_pair_samples(
            run_rdgreedy(g1, s1), run_rdgreedy(g2, s2), trial)));
        break;
      }
      case Algorithm::SG:
        result.per_algorithm.push_back(
            compress_all(trace_pair_samples(run_sg(g1), run_sg(g2), trial)));
        break;
      case Algorithm::SG3:
        result.per_algorithm.push_back(
            compress_all(trace_pair_samples(run_sg3(g1), run_sg3(g2), trial)));
        break;
      case Algorithm::EC:
        result.per_algorithm.push_back(
            compress_all(trace_pair_samples(run_ec(g1), run_ec(g2), trial)));
        break;
    }
  }
  if (cfg.model.model == NoiseModel::EdgeReversal)
    result.equal_fraction = equal_edge_fraction(g1, g2).fraction;
  return result;
}

// Runs fn(trial) for every trial on `workers` threads. The first exception,
// if any, is rethrown on the calling thread.
template <typename Fn>
void parallel_trials(int trials, int workers, Fn fn) {
  if (workers <= 1) {
    for (int t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int t = next.fetch_add(1);
      if (t >= trials) return;
      try {
        fn(t);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min(workers, trials);
  pool.reserve(count);
  for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

void ExperimentConfig::validate() const {
  model.validate();
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (noise_grid.empty()) throw std::invalid_argument("noise grid is empty");
  if (algorithms.empty()) throw std::invalid_argument("no algorithms selected");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  for (std::size_t i = 0; i < algorithms.size(); ++i) {
    if (algorithms[i] == Algorithm::EC && n < 3)
      throw std::invalid_argument("EC needs n >= 3");
    for (std::size_t j = i + 1; j < algorithms.size(); ++j) {
      if (algorithms[i] == algorithms[j])
        throw std::invalid_argument("algorithm listed twice");
    }
  }
  if (model.model == NoiseModel::EdgeReversal) {
    if (n < 4 || n % 2 != 0)
      throw std::invalid_argument("edge reversal model needs even n >= 4");
    for (double p : noise_grid) {
      if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("flip probabilities must lie in [0, 1]");
    }
  } else {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    for (double s : noise_grid) {
      if (!(s >= 0.0))
        throw std::invalid_argument("noise std-devs must be nonnegative");
    }
  }
}

ExperimentResult run_asc_experiment(const ExperimentConfig& cfg) {
  cfg.validate();

  ExperimentResult result;
  result.config = cfg;

  const WeightedGraph sweep_master =
      gen_master(cfg.model, cfg.n, derive_seed(cfg.master_seed, {kTagMaster}));

  for (std::size_t level = 0; level < cfg.noise_grid.size(); ++level) {
    const double noise_param = cfg.noise_grid[level];
    std::vector<TrialResult> trials(cfg.trials);
    parallel_trials(cfg.trials, cfg.workers, [&](int t) {
      if (cfg.resample_master) {
        const WeightedGraph master = gen_master(
            cfg.model, cfg.n,
            derive_seed(cfg.master_seed, {kTagMaster, static_cast<std::uint64_t>(t)}));
        trials[t] = run_trial(cfg, master, level, noise_param, t);
      } else {
        trials[t] = run_trial(cfg, sweep_master, level, noise_param, t);
      }
    });

    LevelResult level_result;
    level_result.noise_param = noise_param;
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
      InfoCurve curve;
      curve.algorithm = cfg.algorithms[a];
      curve.noise_param = noise_param;
      curve.n = cfg.n;

      const int steps = steps_for(cfg.algorithms[a], cfg.n);
      std::vector<LogRatioSample> column(cfg.trials);
      for (int step = 1; step <= steps; ++step) {
        for (int t = 0; t < cfg.trials; ++t)
          column[t] = trials[t].per_algorithm[a][step - 1];
        const auto mean_log =
            stepwise_information(std::span<const LogRatioSample>(column), cfg.n,
                                 EstimatorMode::MeanLog);
        const auto log_mean =
            stepwise_information(std::span<const LogRatioSample>(column), cfg.n,
                                 EstimatorMode::LogMean);
        StepInfo info;
        info.step = step;
        info.samples = mean_log.samples;
        info.zero_delta = mean_log.zero_delta;
        info.mean_log = mean_log.value;
        info.mean_log_defined = mean_log.defined;
        info.log_mean = log_mean.value;
        curve.steps.push_back(info);
      }

      const bool any_mean_log_defined =
          std::any_of(curve.steps.begin(), curve.steps.end(),
                      [](const StepInfo& s) { return s.mean_log_defined; });
      if (any_mean_log_defined)
        curve.content_mean_log =
            information_content(curve.steps, EstimatorMode::MeanLog);
      curve.content_log_mean =
          information_content(curve.steps, EstimatorMode::LogMean);
      level_result.curves.push_back(std::move(curve));
    }

    if (cfg.model.model == NoiseModel::EdgeReversal) {
      double sum = 0.0;
      for (const auto& t : trials) sum += t.equal_fraction;
      level_result.mean_equal_fraction = sum / cfg.trials;
      level_result.has_equal_fraction = true;
    }
    result.levels.push_back(std::move(level_result));
  }
  return result;
}

namespace {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

const char* model_name(NoiseModel m) {
  return m == NoiseModel::EdgeReversal ? "edge-reversal" : "gaussian";
}

}  // namespace

std::string curves_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "algorithm,model,n,noise_param,t,I_t_meanlog,I_t_logmean,"
         "I_t_per_node_meanlog,I_t_per_node_logmean,zero_delta_count,samples,"
         "equal_edge_fraction_mean\n";
  const auto& cfg = result.config;
  for (const auto& level : result.levels) {
    for (const auto& curve : level.curves) {
      for (const auto& s : curve.steps) {
        out << algorithm_name(curve.algorithm) << ','
            << model_name(cfg.model.model) << ',' << cfg.n << ','
            << fmt_double(curve.noise_param) << ',' << s.step << ',';
        if (s.mean_log_defined) {
          out << fmt_double(s.mean_log) << ',' << fmt_double(s.log_mean) << ','
              << fmt_double(s.mean_log / cfg.n) << ','
              << fmt_double(s.log_mean / cfg.n) << ',';
        } else {
          out << "nan," << fmt_double(s.log_mean) << ",nan,"
              << fmt_double(s.log_mean / cfg.n) << ',';
        }
        out << s.zero_delta << ',' << s.samples << ',';
        if (level.has_equal_fraction) out << fmt_double(level.mean_equal_fraction);
        out << '\n';
      }
    }
  }
  return out.str();
}

std::string content_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "algorithm,model,n,noise_param,I_meanlog,t_star_meanlog,I_logmean,"
         "t_star_logmean\n";
  const auto& cfg = result.config;
  for (const auto& level : result.levels) {
    for (const auto& curve : level.curves) {
      out << algorithm_name(curve.algorithm) << ','
          << model_name(cfg.model.model) << ',' << cfg.n << ','
          << fmt_double(curve.noise_param) << ',';
      if (curve.content_mean_log.defined) {
        out << fmt_double(curve.content_mean_log.value) << ','
            << curve.content_mean_log.t_star << ',';
      } else {
        out << "nan,,";
      }
      out << fmt_double(curve.content_log_mean.value) << ','
          << curve.content_log_mean.t_star << '\n';
    }
  }
  return out.str();
}

void write_file_atomic(const std::string& text, const std::string& file) {
  namespace fs = std::filesystem;
  const fs::path target(file);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << text;
    if (!out) {
      fs::remove(tmp);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

}  // namespace maxcut
