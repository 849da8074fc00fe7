#include "maxcut/estimator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace maxcut {

EstimatorMode estimator_mode_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "meanlog") return EstimatorMode::MeanLog;
  if (lower == "logmean") return EstimatorMode::LogMean;
  throw std::invalid_argument("unknown estimator mode: " + std::string(name));
}

std::string_view estimator_mode_name(EstimatorMode mode) {
  return mode == EstimatorMode::MeanLog ? "meanlog" : "logmean";
}

LogRatioSample compress_sample(const CardinalitySample& sample) {
  LogRatioSample out;
  if (sample.delta.is_zero()) {
    out.zero = true;
    return out;
  }
  out.log_term = sample.delta.log2() - sample.c_prime.log2() -
                 sample.c_double.log2();
  return out;
}

StepEstimate stepwise_information(std::span<const LogRatioSample> samples,
                                  int n, EstimatorMode mode) {
  if (samples.empty()) throw std::invalid_argument("no samples for step");
  const double log_space = solution_space_size(n).log2();

  StepEstimate est;
  est.samples = static_cast<int>(samples.size());
  for (const auto& s : samples) {
    if (s.zero) ++est.zero_delta;
  }

  if (mode == EstimatorMode::MeanLog) {
    const int included = est.samples - est.zero_delta;
    if (included == 0) return est;  // undefined for this step
    double sum = 0.0;
    for (const auto& s : samples) {
      if (!s.zero) sum += s.log_term;
    }
    est.value = log_space + sum / included;
    est.defined = true;
    return est;
  }

  // LogMean: log2(|C| * mean ratio); zero-delta trials contribute zero mass.
  double ratio_sum = 0.0;
  for (const auto& s : samples) {
    if (!s.zero) ratio_sum += std::exp2(s.log_term);
  }
  if (ratio_sum == 0.0) {
    est.value = -std::numeric_limits<double>::infinity();
    est.defined = true;
    return est;
  }
  est.value = log_space + std::log2(ratio_sum / est.samples);
  est.defined = true;
  return est;
}

namespace {

std::vector<LogRatioSample> compress_step(
    std::span<const CardinalitySample> samples) {
  if (samples.empty()) throw std::invalid_argument("no samples for step");
  std::vector<LogRatioSample> out;
  out.reserve(samples.size());
  for (const auto& s : samples) {
    if (s.step != samples.front().step)
      throw std::invalid_argument("samples mix different steps");
    out.push_back(compress_sample(s));
  }
  return out;
}

}  // namespace

StepEstimate stepwise_information(std::span<const CardinalitySample> samples,
                                  int n, EstimatorMode mode) {
  return stepwise_information(std::span<const LogRatioSample>(compress_step(samples)),
                              n, mode);
}

StepInfo step_information(std::span<const CardinalitySample> samples, int n) {
  const auto compressed = compress_step(samples);
  const std::span<const LogRatioSample> view(compressed);
  const auto mean_log = stepwise_information(view, n, EstimatorMode::MeanLog);
  const auto log_mean = stepwise_information(view, n, EstimatorMode::LogMean);
  StepInfo info;
  info.step = samples.front().step;
  info.samples = mean_log.samples;
  info.zero_delta = mean_log.zero_delta;
  info.mean_log = mean_log.value;
  info.mean_log_defined = mean_log.defined;
  info.log_mean = log_mean.value;
  return info;
}

ContentPoint information_content(const std::vector<StepInfo>& steps,
                                 EstimatorMode mode) {
  ContentPoint best;
  for (const auto& s : steps) {
    double value;
    if (mode == EstimatorMode::MeanLog) {
      if (!s.mean_log_defined) continue;
      value = s.mean_log;
    } else {
      value = s.log_mean;
    }
    if (!best.defined || value > best.value) {
      best.value = value;
      best.t_star = s.step;
      best.defined = true;
    }
  }
  if (!best.defined)
    throw std::invalid_argument("no defined step values for information content");
  return best;
}

namespace {

template <typename Trace, typename CountFn, typename IntersectFn>
std::vector<CardinalitySample> samples_impl(const Trace& t1, const Trace& t2,
                                            int trial, CountFn count,
                                            IntersectFn intersect) {
  if (t1.n != t2.n) throw std::invalid_argument("traces cover different graphs");
  if (t1.algorithm != t2.algorithm)
    throw std::invalid_argument("traces come from different algorithms");
  if (t1.steps.size() != t2.steps.size())
    throw std::invalid_argument("traces have different step counts");

  std::vector<CardinalitySample> samples;
  samples.reserve(t1.steps.size());
  for (std::size_t i = 0; i < t1.steps.size(); ++i) {
    CardinalitySample s;
    s.trial = trial;
    s.step = t1.steps[i].step;
    s.c_prime = count(t1.steps[i]);
    s.c_double = count(t2.steps[i]);
    s.delta = intersect(t1.steps[i], t2.steps[i]);
    samples.push_back(std::move(s));
  }
  return samples;
}

}  // namespace

std::vector<CardinalitySample> trace_pair_samples(const DoubleGreedyTrace& t1,
                                                  const DoubleGreedyTrace& t2,
                                                  int trial) {
  const bool sg_family =
      t1.algorithm == Algorithm::SG || t1.algorithm == Algorithm::SG3;
  return samples_impl(
      t1, t2, trial,
      [sg_family](const DoubleGreedyState& s) {
        return sg_family ? count_sg_family(s) : count_double_greedy(s);
      },
      [](const DoubleGreedyState& a, const DoubleGreedyState& b) {
        return intersect_double_greedy(a, b);
      });
}

std::vector<CardinalitySample> trace_pair_samples(const ContractionTrace& t1,
                                                  const ContractionTrace& t2,
                                                  int trial) {
  return samples_impl(
      t1, t2, trial,
      [](const SuperVertexPartition& s) { return count_ec(s); },
      [](const SuperVertexPartition& a, const SuperVertexPartition& b) {
        return intersect_ec(a, b);
      });
}

}  // namespace maxcut
