#ifndef MAXCUT_NOISE_HPP
#define MAXCUT_NOISE_HPP

#include <cstdint>

#include "maxcut/graph.hpp"

namespace maxcut {

enum class NoiseModel { EdgeReversal, GaussianWeights };

/// Parameters for the two instance-generation models. Edge reversal flips
/// weights w -> 1-w per edge; the Gaussian model adds zero-mean noise to a
/// Gaussian-weighted master graph.
struct NoiseModelConfig {
  NoiseModel model = NoiseModel::EdgeReversal;

  // Edge reversal
  double flip_master = 0.2;  // p_m, master-graph flip probability
  double flip = 0.0;         // p, per-instance flip probability

  // Gaussian weights
  double mean = 600.0;         // mu
  double sigma_master = 50.0;  // master-weight std-dev
  double sigma = 0.0;          // per-instance noise std-dev

  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
};

/// Master graph for the edge reversal model. Starts from a planted balanced
/// bipartition -- even-indexed vertices versus odd-indexed ones -- with
/// uniform weights in [0, 8/n^2] inside each side and in [1 - 8/n^2, 1]
/// across, then flips each edge (w -> 1-w) independently with probability
/// p_m. One draw per unordered pair in lexicographic order. Requires even
/// n >= 4.
///
/// Uniform draws are snapped to a 2^-26 grid so that w and 1-w are both
/// exactly representable; edge reversal is then exact and involutive, which
/// the equal-edge consistency statistic relies on.
WeightedGraph gen_bipartite_master(int n, double p_m, std::uint64_t seed);

/// The planted side-A vertex set of gen_bipartite_master (even indices).
std::vector<Vertex> planted_bipartition(int n);

/// Flips each edge weight w -> 1-w independently with probability p, one
/// Bernoulli draw per unordered pair in lexicographic order. Requires all
/// weights of g in [0, 1].
WeightedGraph flip_noise(const WeightedGraph& g, double p, std::uint64_t seed);

/// Master graph for the Gaussian model: each edge weight drawn from
/// Normal(mu, sigma_m^2); negative draws are replaced by mu.
WeightedGraph gen_gaussian_master(int n, double mu, double sigma_m,
                                  std::uint64_t seed);

/// Adds Normal(0, sigma^2) noise per unordered pair; negative results are
/// clamped to 0.
WeightedGraph gaussian_noise(const WeightedGraph& g, double sigma,
                             std::uint64_t seed);

/// Number of unordered pairs with bit-identical weights in two graphs of
/// equal size. Under edge reversal with flip probability p applied twice to
/// a common master the expected fraction is p^2 + (1-p)^2.
struct ConsistencyStat {
  std::int64_t equal_pairs = 0;
  std::int64_t total_edges = 0;
  double fraction = 0.0;
};

ConsistencyStat equal_edge_fraction(const WeightedGraph& g1,
                                    const WeightedGraph& g2);

/// Builds the master graph for a model configuration.
WeightedGraph gen_master(const NoiseModelConfig& cfg, int n,
                         std::uint64_t seed);

/// Applies the model's instance noise channel to a master graph.
WeightedGraph apply_instance_noise(const NoiseModelConfig& cfg,
                                   const WeightedGraph& master,
                                   double noise_param, std::uint64_t seed);

}  // namespace maxcut

#endif  // MAXCUT_NOISE_HPP
