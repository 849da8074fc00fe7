#ifndef MAXCUT_EXPERIMENT_HPP
#define MAXCUT_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "maxcut/estimator.hpp"
#include "maxcut/noise.hpp"

namespace maxcut {

struct ExperimentConfig {
  NoiseModelConfig model;
  int n = 100;
  std::vector<Algorithm> algorithms = {Algorithm::D2Greedy, Algorithm::RDGreedy,
                                       Algorithm::SG, Algorithm::SG3,
                                       Algorithm::EC};
  std::vector<double> noise_grid;  // p values (edge reversal) or sigma values
  int trials = 1000;
  std::uint64_t master_seed = 1;
  EstimatorMode mode = EstimatorMode::MeanLog;
  int workers = 1;
  bool resample_master = false;  // fresh master per trial instead of one per sweep
  bool share_rd_seed = false;    // RDGreedy reuses one stream for G' and G''

  void validate() const;
};

/// Curves for every selected algorithm at one noise level, plus the mean
/// equal-edge fraction across trials (edge reversal only).
struct LevelResult {
  double noise_param = 0.0;
  std::vector<InfoCurve> curves;  // config algorithm order
  double mean_equal_fraction = 0.0;
  bool has_equal_fraction = false;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<LevelResult> levels;
};

/// Runs the two-instance sweep: fixes the master graph, draws `trials`
/// independent (G', G'') pairs per noise level, runs every selected
/// algorithm on both instances, converts step-aligned trace pairs to
/// cardinality samples and reduces them to information curves. Trials are
/// distributed over `workers` threads; per-trial results land in
/// preallocated slots and are reduced in trial order, so the outcome is
/// identical for any worker count.
ExperimentResult run_asc_experiment(const ExperimentConfig& cfg);

/// CSV emission. curves.csv holds one row per (algorithm, noise level,
/// step); content.csv one row per (algorithm, noise level). Rows are sorted
/// and floats printed with 12 significant digits, so equal results produce
/// byte-identical files.
std::string curves_csv(const ExperimentResult& result);
std::string content_csv(const ExperimentResult& result);

/// Writes text to `file` atomically (temp file + rename), creating parent
/// directories. Nothing is left behind on failure.
void write_file_atomic(const std::string& text, const std::string& file);

}  // namespace maxcut

#endif  // MAXCUT_EXPERIMENT_HPP
