#include "maxcut/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "maxcut/rng.hpp"

namespace maxcut {

namespace {

constexpr std::uint64_t kTagBipartiteBase = 0x62617365ULL;  // "base"
constexpr std::uint64_t kTagMasterFlip = 0x666c6970ULL;     // "flip"

// Snap w in [0, 0.5] down to the 2^-26 grid. Grid values and their
// reversals 1-w are both exactly representable, making w -> 1-w an exact
// involution on the stored weights.
double quantize(double w) { return std::floor(w * 0x1.0p26) * 0x1.0p-26; }

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

void NoiseModelConfig::validate() const {
  switch (model) {
    case NoiseModel::EdgeReversal:
      check_probability(flip_master, "flip_master");
      check_probability(flip, "flip");
      break;
    case NoiseModel::GaussianWeights:
      if (!(sigma_master >= 0.0))
        throw std::invalid_argument("sigma_master must be nonnegative");
      if (!(sigma >= 0.0))
        throw std::invalid_argument("sigma must be nonnegative");
      break;
  }
}

std::vector<Vertex> planted_bipartition(int n) {
  std::vector<Vertex> side;
  for (Vertex v = 0; v < n; v += 2) side.push_back(v);
  return side;
}

WeightedGraph gen_bipartite_master(int n, double p_m, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("bipartite master needs even n >= 4");
  check_probability(p_m, "p_m");

  const double band = 8.0 / (static_cast<double>(n) * n);
  WeightedGraph g(n);
  Rng rng(derive_seed(seed, {kTagBipartiteBase}));
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const bool same_side = (i % 2) == (j % 2);
      const double base = quantize(rng.uniform01() * band);
      g.set_weight(i, j, same_side ? base : 1.0 - base);
    }
  }
  return flip_noise(g, p_m, derive_seed(seed, {kTagMasterFlip}));
}

WeightedGraph flip_noise(const WeightedGraph& g, double p, std::uint64_t seed) {
  check_probability(p, "p");
  const int n = g.size();
  WeightedGraph out(n);
  Rng rng(seed);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const double w = g.weight(i, j);
      if (!(w >= 0.0 && w <= 1.0))
        throw std::invalid_argument("edge reversal requires weights in [0, 1]");
      out.set_weight(i, j, rng.bernoulli(p) ? 1.0 - w : w);
    }
  }
  return out;
}

WeightedGraph gen_gaussian_master(int n, double mu, double sigma_m,
                                  std::uint64_t seed) {
  if (!(sigma_m >= 0.0))
    throw std::invalid_argument("sigma_m must be nonnegative");
  WeightedGraph g(n);
  Rng rng(seed);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const double w = rng.normal(mu, sigma_m);
      g.set_weight(i, j, w < 0.0 ? mu : w);
    }
  }
  return g;
}

WeightedGraph gaussian_noise(const WeightedGraph& g, double sigma,
                             std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be nonnegative");
  const int n = g.size();
  WeightedGraph out(n);
  Rng rng(seed);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const double w = g.weight(i, j) + rng.normal(0.0, sigma);
      out.set_weight(i, j, w < 0.0 ? 0.0 : w);
    }
  }
  return out;
}

ConsistencyStat equal_edge_fraction(const WeightedGraph& g1,
                                    const WeightedGraph& g2) {
  if (g1.size() != g2.size())
    throw std::invalid_argument("graphs differ in vertex count");
  ConsistencyStat stat;
  stat.total_edges = g1.edge_count();
  for (Vertex i = 0; i < g1.size(); ++i) {
    for (Vertex j = i + 1; j < g1.size(); ++j) {
      if (g1.weight(i, j) == g2.weight(i, j)) ++stat.equal_pairs;
    }
  }
  stat.fraction = static_cast<double>(stat.equal_pairs) / stat.total_edges;
  return stat;
}

WeightedGraph gen_master(const NoiseModelConfig& cfg, int n,
                         std::uint64_t seed) {
  cfg.validate();
  switch (cfg.model) {
    case NoiseModel::EdgeReversal:
      return gen_bipartite_master(n, cfg.flip_master, seed);
    case NoiseModel::GaussianWeights:
      return gen_gaussian_master(n, cfg.mean, cfg.sigma_master, seed);
  }
  throw std::logic_error("unknown noise model");
}

WeightedGraph apply_instance_noise(const NoiseModelConfig& cfg,
                                   const WeightedGraph& master,
                                   double noise_param, std::uint64_t seed) {
  switch (cfg.model) {
    case NoiseModel::EdgeReversal:
      return flip_noise(master, noise_param, seed);
    case NoiseModel::GaussianWeights:
      return gaussian_noise(master, noise_param, seed);
  }
  throw std::logic_error("unknown noise model");
}

}  // namespace maxcut
