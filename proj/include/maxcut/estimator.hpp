#ifndef MAXCUT_ESTIMATOR_HPP
#define MAXCUT_ESTIMATOR_HPP

#include <span>
#include <vector>

#include "maxcut/counting.hpp"
#include "maxcut/engines.hpp"

namespace maxcut {

/// Per-trial, per-step cardinalities feeding the information estimate.
struct CardinalitySample {
  int trial = 0;
  int step = 0;
  ExactCount c_prime;   // |C_t(G')|
  ExactCount c_double;  // |C_t(G'')|
  ExactCount delta;     // |C_t(G') n C_t(G'')|
};

/// The expectation in the stepwise information is over log(|C| D/(C'C''))
/// and is undefined on trials with D = 0. MeanLog averages the log over the
/// trials with D > 0 and reports how many were excluded; LogMean applies the
/// log to the mean ratio over all trials, which stays finite whenever any
/// trial has D > 0 and decays towards -inf otherwise.
enum class EstimatorMode { MeanLog, LogMean };

EstimatorMode estimator_mode_from_name(std::string_view name);
std::string_view estimator_mode_name(EstimatorMode mode);

struct StepEstimate {
  double value = 0.0;  // bits; meaningful iff defined
  int zero_delta = 0;  // trials excluded (MeanLog) or contributing zero mass
  int samples = 0;
  bool defined = false;
};

/// Stepwise information in bits for one step's samples across trials.
/// Logs are base 2. Throws on an empty sample list or mixed steps. In
/// LogMean mode an all-zero step is "defined" with value -infinity.
StepEstimate stepwise_information(std::span<const CardinalitySample> samples,
                                  int n, EstimatorMode mode);

/// Both estimates for one step, as emitted to the results table.
struct StepInfo {
  int step = 0;
  int samples = 0;
  int zero_delta = 0;
  double mean_log = 0.0;
  bool mean_log_defined = false;
  double log_mean = 0.0;  // -inf when every trial had delta = 0
};

StepInfo step_information(std::span<const CardinalitySample> samples, int n);

/// Information content: the maximum stepwise value and its earliest
/// attaining step.
struct ContentPoint {
  double value = 0.0;
  int t_star = 0;
  bool defined = false;
};

/// Throws std::invalid_argument when no step carries a defined value for
/// the requested mode.
ContentPoint information_content(const std::vector<StepInfo>& steps,
                                 EstimatorMode mode);

/// Per-step information estimates for one algorithm at one noise level.
struct InfoCurve {
  Algorithm algorithm = Algorithm::D2Greedy;
  double noise_param = 0.0;
  int n = 0;
  std::vector<StepInfo> steps;
  ContentPoint content_mean_log;
  ContentPoint content_log_mean;

  const ContentPoint& content(EstimatorMode mode) const {
    return mode == EstimatorMode::MeanLog ? content_mean_log : content_log_mean;
  }
};

/// Cardinality samples for a step-aligned trace pair, one per step.
std::vector<CardinalitySample> trace_pair_samples(const DoubleGreedyTrace& t1,
                                                  const DoubleGreedyTrace& t2,
                                                  int trial);
std::vector<CardinalitySample> trace_pair_samples(const ContractionTrace& t1,
                                                  const ContractionTrace& t2,
                                                  int trial);

/// Compact per-sample form carrying only what the estimators need; lets the
/// experiment driver discard the big integers once a trial is reduced.
struct LogRatioSample {
  double log_term = 0.0;  // log2 delta - log2 c' - log2 c'' (when delta > 0)
  bool zero = false;
};

LogRatioSample compress_sample(const CardinalitySample& sample);

StepEstimate stepwise_information(std::span<const LogRatioSample> samples,
                                  int n, EstimatorMode mode);

}  // namespace maxcut

#endif  // MAXCUT_ESTIMATOR_HPP
