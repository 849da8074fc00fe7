#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "maxcut/estimator.hpp"
#include "maxcut/experiment.hpp"
#include "maxcut/noise.hpp"
#include "maxcut/oracle.hpp"
#include "maxcut/rng.hpp"

using namespace maxcut;

namespace {

CardinalitySample sample(int trial, int step, unsigned cp, unsigned cd,
                         unsigned delta) {
  CardinalitySample s;
  s.trial = trial;
  s.step = step;
  s.c_prime = ExactCount::from_uint(cp);
  s.c_double = ExactCount::from_uint(cd);
  s.delta = ExactCount::from_uint(delta);
  return s;
}

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.model.model = NoiseModel::EdgeReversal;
  cfg.n = 12;
  cfg.trials = 25;
  cfg.noise_grid = {0.0};
  cfg.master_seed = 101;
  cfg.workers = 2;
  return cfg;
}

}  // namespace

TEST_CASE("stepwise information on the noise-free n=4 example") {
  // SG3 at t=1: delta = |C'| = |C''| = 4, so I_1 = log2(7*4/16).
  const std::vector<CardinalitySample> samples = {sample(0, 1, 4, 4, 4),
                                                  sample(1, 1, 4, 4, 4)};
  const double expected = std::log2(7.0) - 2.0;
  const auto mean_log = stepwise_information(samples, 4, EstimatorMode::MeanLog);
  const auto log_mean = stepwise_information(samples, 4, EstimatorMode::LogMean);
  CHECK(mean_log.defined);
  CHECK(mean_log.value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(log_mean.value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(mean_log.zero_delta == 0);
}

TEST_CASE("zero-delta handling differs by mode") {
  const std::vector<CardinalitySample> all_zero = {sample(0, 3, 4, 4, 0)};
  const auto mean_log = stepwise_information(all_zero, 4, EstimatorMode::MeanLog);
  CHECK(!mean_log.defined);
  CHECK(mean_log.zero_delta == 1);

  const auto log_mean = stepwise_information(all_zero, 4, EstimatorMode::LogMean);
  CHECK(log_mean.defined);
  CHECK(std::isinf(log_mean.value));
  CHECK(log_mean.value < 0.0);

  // Mixed: the excluded trial is reported, the other enters the average.
  const std::vector<CardinalitySample> mixed = {sample(0, 3, 4, 4, 0),
                                                sample(1, 3, 4, 4, 4)};
  const auto est = stepwise_information(mixed, 4, EstimatorMode::MeanLog);
  CHECK(est.defined);
  CHECK(est.zero_delta == 1);
  CHECK(est.samples == 2);
  CHECK(est.value == doctest::Approx(std::log2(7.0) - 2.0).epsilon(1e-12));
}

TEST_CASE("stepwise information rejects bad input") {
  const std::vector<CardinalitySample> empty;
  CHECK_THROWS_AS(stepwise_information(empty, 4, EstimatorMode::MeanLog),
                  std::invalid_argument);
  const std::vector<CardinalitySample> mixed_steps = {sample(0, 1, 4, 4, 4),
                                                      sample(1, 2, 4, 4, 4)};
  CHECK_THROWS_AS(stepwise_information(mixed_steps, 4, EstimatorMode::MeanLog),
                  std::invalid_argument);
}

TEST_CASE("mean of logs never exceeds log of mean") {
  Rng rng(8);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<CardinalitySample> samples;
    for (int t = 0; t < 20; ++t) {
      const unsigned cp = 1u << (1 + rng.index(6));
      const unsigned cd = 1u << (1 + rng.index(6));
      const unsigned delta = 1 + static_cast<unsigned>(rng.index(std::min(cp, cd)));
      samples.push_back(sample(t, 1, cp, cd, delta));
    }
    const auto mean_log = stepwise_information(samples, 10, EstimatorMode::MeanLog);
    const auto log_mean = stepwise_information(samples, 10, EstimatorMode::LogMean);
    CHECK(mean_log.value <= log_mean.value + 1e-12);
  }
}

TEST_CASE("information content picks the earliest maximum") {
  std::vector<StepInfo> steps(4);
  for (int i = 0; i < 4; ++i) {
    steps[i].step = i + 1;
    steps[i].mean_log_defined = true;
  }

  steps[0].mean_log = 0.5;
  steps[1].mean_log = 1.5;
  steps[2].mean_log = 2.5;
  steps[3].mean_log = 3.5;
  auto content = information_content(steps, EstimatorMode::MeanLog);
  CHECK(content.value == 3.5);
  CHECK(content.t_star == 4);

  steps[1].mean_log = 7.0;
  steps[2].mean_log = 7.0;
  content = information_content(steps, EstimatorMode::MeanLog);
  CHECK(content.value == 7.0);
  CHECK(content.t_star == 2);

  for (auto& s : steps) s.mean_log_defined = false;
  CHECK_THROWS_AS(information_content(steps, EstimatorMode::MeanLog),
                  std::invalid_argument);
}

TEST_CASE("noise-free run matches the closed form at every step") {
  auto cfg = small_config();
  cfg.algorithms = {Algorithm::D2Greedy, Algorithm::SG, Algorithm::SG3,
                    Algorithm::EC};
  const auto result = run_asc_experiment(cfg);
  REQUIRE(result.levels.size() == 1);

  const double log_space = solution_space_size(cfg.n).log2();
  for (const auto& curve : result.levels[0].curves) {
    // Deterministic algorithms on identical instances reach the maximum.
    CHECK(curve.content_mean_log.defined);
    CHECK(curve.content_mean_log.value ==
          doctest::Approx(log_space).epsilon(1e-12));
    CHECK(curve.content_log_mean.value ==
          doctest::Approx(log_space).epsilon(1e-12));

    for (const auto& s : curve.steps) {
      CHECK(s.samples == cfg.trials);
      CHECK(s.zero_delta == 0);
      // Both estimators coincide at zero variance.
      CHECK(s.mean_log == doctest::Approx(s.log_mean).epsilon(1e-12));
      CHECK(s.mean_log <= log_space + 1e-12);
      if (curve.algorithm == Algorithm::SG3) {
        const double expected = s.step + log_space - (cfg.n - 1);
        CHECK(s.mean_log == doctest::Approx(expected).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("p=1 reproduces the p=0 content for deterministic algorithms") {
  auto cfg = small_config();
  cfg.algorithms = {Algorithm::D2Greedy, Algorithm::SG, Algorithm::SG3,
                    Algorithm::EC};
  cfg.noise_grid = {0.0, 1.0};
  const auto result = run_asc_experiment(cfg);
  const double log_space = solution_space_size(cfg.n).log2();
  for (const auto& level : result.levels) {
    for (const auto& curve : level.curves)
      CHECK(curve.content_mean_log.value ==
            doctest::Approx(log_space).epsilon(1e-12));
    CHECK(level.mean_equal_fraction == 1.0);
  }
}

TEST_CASE("zero-delta counts and included samples add up") {
  auto cfg = small_config();
  cfg.noise_grid = {0.5};
  cfg.trials = 30;
  const double log_space = solution_space_size(cfg.n).log2();
  const auto result = run_asc_experiment(cfg);
  for (const auto& curve : result.levels[0].curves) {
    for (const auto& s : curve.steps) {
      CHECK(s.samples == cfg.trials);
      CHECK(s.zero_delta >= 0);
      CHECK(s.zero_delta <= cfg.trials);
      CHECK(s.mean_log_defined == (s.zero_delta < s.samples));
      if (s.mean_log_defined) CHECK(s.mean_log <= log_space + 1e-12);
      CHECK(s.log_mean <= log_space + 1e-12);
    }
  }
}

TEST_CASE("resampling the master per trial changes the estimates") {
  auto cfg = small_config();
  cfg.noise_grid = {0.4};
  cfg.trials = 30;
  const auto fixed = run_asc_experiment(cfg);

  cfg.resample_master = true;
  const auto resampled = run_asc_experiment(cfg);
  CHECK(curves_csv(fixed) != curves_csv(resampled));
  // Still reproducible under the flag.
  CHECK(curves_csv(run_asc_experiment(cfg)) == curves_csv(resampled));
}

TEST_CASE("per-trial samples agree with the enumeration oracle") {
  const int n = 10;
  const auto master = gen_bipartite_master(n, 0.2, 5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g1 = flip_noise(master, 0.3,
                               derive_seed(3, {static_cast<std::uint64_t>(trial), 0}));
    const auto g2 = flip_noise(master, 0.3,
                               derive_seed(3, {static_cast<std::uint64_t>(trial), 1}));

    const auto d2 = trace_pair_samples(run_d2greedy(g1), run_d2greedy(g2), trial);
    const auto d2_t1 = run_d2greedy(g1);
    const auto d2_t2 = run_d2greedy(g2);
    for (std::size_t i = 0; i < d2.size(); ++i) {
      CHECK(d2[i].delta <= min(d2[i].c_prime, d2[i].c_double));
      CHECK(d2[i].delta ==
            oracle_intersection(d2_t1.steps[i], d2_t2.steps[i], n));
    }

    const auto ec_t1 = run_ec(g1);
    const auto ec_t2 = run_ec(g2);
    const auto ec = trace_pair_samples(ec_t1, ec_t2, trial);
    for (std::size_t i = 0; i < ec.size(); ++i) {
      CHECK(ec[i].delta <= min(ec[i].c_prime, ec[i].c_double));
      CHECK(ec[i].delta ==
            oracle_intersection(ec_t1.steps[i], ec_t2.steps[i], n));
    }
  }
}

TEST_CASE("experiment results are identical across worker counts") {
  auto cfg = small_config();
  cfg.noise_grid = {0.3, 0.6};
  cfg.trials = 30;

  auto serial = cfg;
  serial.workers = 1;
  auto parallel = cfg;
  parallel.workers = 4;

  const auto r1 = run_asc_experiment(serial);
  const auto r2 = run_asc_experiment(parallel);
  CHECK(curves_csv(r1) == curves_csv(r2));
  CHECK(content_csv(r1) == content_csv(r2));

  // And the whole thing is reproducible end to end.
  const auto r3 = run_asc_experiment(serial);
  CHECK(curves_csv(r1) == curves_csv(r3));
}

TEST_CASE("csv layout") {
  auto cfg = small_config();
  cfg.trials = 4;
  cfg.algorithms = {Algorithm::SG3};
  const auto result = run_asc_experiment(cfg);
  const auto curves = curves_csv(result);
  CHECK(curves.find(
            "algorithm,model,n,noise_param,t,I_t_meanlog,I_t_logmean,"
            "I_t_per_node_meanlog,I_t_per_node_logmean,zero_delta_count,"
            "samples,equal_edge_fraction_mean\n") == 0);
  CHECK(curves.find("SG3,edge-reversal,12,0,1,") != std::string::npos);

  // Per-node columns carry I_t / n to full precision.
  const auto& step1 = result.levels[0].curves[0].steps[0];
  char expect[64];
  std::snprintf(expect, sizeof(expect), "%.12g,%.12g", step1.mean_log,
                step1.mean_log / cfg.n);
  CHECK(curves.find(expect) != std::string::npos);

  const auto content = content_csv(result);
  CHECK(content.find("algorithm,model,n,noise_param,I_meanlog,t_star_meanlog,"
                     "I_logmean,t_star_logmean\n") == 0);
  CHECK(content.find("SG3,edge-reversal,12,0,") != std::string::npos);

  // Gaussian rows leave the equal-edge fraction column blank.
  auto gaussian_cfg = cfg;
  gaussian_cfg.model.model = NoiseModel::GaussianWeights;
  gaussian_cfg.n = 9;
  gaussian_cfg.noise_grid = {50.0};
  const auto gaussian_curves = curves_csv(run_asc_experiment(gaussian_cfg));
  std::istringstream lines(gaussian_curves);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    CHECK(line.back() == ',');
    CHECK(line.find("gaussian") != std::string::npos);
  }
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  cfg.noise_grid = {0.1};
  cfg.n = 100;
  CHECK_NOTHROW(cfg.validate());

  auto bad = cfg;
  bad.trials = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = cfg;
  bad.noise_grid.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = cfg;
  bad.noise_grid = {1.5};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = cfg;
  bad.n = 99;  // odd: no balanced bipartite master
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = cfg;
  bad.model.model = NoiseModel::GaussianWeights;
  bad.n = 99;
  bad.noise_grid = {125.0};
  CHECK_NOTHROW(bad.validate());
  bad.noise_grid = {-1.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("estimator mode names") {
  CHECK(estimator_mode_from_name("MeanLog") == EstimatorMode::MeanLog);
  CHECK(estimator_mode_from_name("logmean") == EstimatorMode::LogMean);
  CHECK_THROWS_AS(estimator_mode_from_name("median"), std::invalid_argument);
}
