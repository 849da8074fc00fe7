#ifndef MAXCUT_GRAPH_HPP
#define MAXCUT_GRAPH_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace maxcut {

using Vertex = std::int32_t;

/// Complete graph with symmetric nonnegative edge weights and zero diagonal,
/// stored as a dense n x n matrix. Immutable in normal use once built.
class WeightedGraph {
 public:
  /// All-zero weights on n >= 2 vertices.
  explicit WeightedGraph(int n);

  int size() const { return n_; }

  /// Number of unordered vertex pairs, n(n-1)/2.
  std::int64_t edge_count() const {
    return static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
  }

  double weight(Vertex i, Vertex j) const {
    check_vertex(i);
    check_vertex(j);
    return w_[static_cast<std::size_t>(i) * n_ + j];
  }

  /// Sets w_ij = w_ji = w. Requires i != j and w >= 0.
  void set_weight(Vertex i, Vertex j, double w);

  /// Sum of all weights incident to v.
  double weighted_degree(Vertex v) const;

  /// Throws std::invalid_argument unless symmetric, nonnegative and
  /// zero-diagonal. Used after bulk construction (e.g. file load).
  void check_invariants() const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  int n_;
  std::vector<double> w_;
};

/// Total weight crossing the cut (s, V \ s). Zero for s empty or s = V.
/// Duplicate entries in s are ignored; out-of-range vertices throw.
double cut_value(const WeightedGraph& g, std::span<const Vertex> s);

/// Plain-text graph file: header line `n`, then n(n-1)/2 lines `i j w` with
/// 0 <= i < j < n in lexicographic order and w printed with 17 significant
/// digits, which round-trips doubles exactly.
void save_graph(const WeightedGraph& g, const std::filesystem::path& file);
WeightedGraph load_graph(const std::filesystem::path& file);

}  // namespace maxcut

#endif  // MAXCUT_GRAPH_HPP
