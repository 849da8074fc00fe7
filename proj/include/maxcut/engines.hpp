#ifndef MAXCUT_ENGINES_HPP
#define MAXCUT_ENGINES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "maxcut/graph.hpp"

namespace maxcut {

enum class Algorithm { D2Greedy, RDGreedy, SG, SG3, EC };

std::string_view algorithm_name(Algorithm a);
Algorithm algorithm_from_name(std::string_view name);  // case-insensitive

/// Partial labelling of the double greedy algorithms after `step` steps:
/// side_a is S1 (the growing set S), side_b is S2 (the vertices removed from
/// the shrinking set T, i.e. V \ T), unlabelled the rest. All three sorted,
/// pairwise disjoint, union = V.
struct DoubleGreedyState {
  int step = 0;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  std::vector<Vertex> unlabelled;

  int n() const {
    return static_cast<int>(side_a.size() + side_b.size() + unlabelled.size());
  }

  /// Builds a state on n vertices from the two labelled sides; the
  /// unlabelled set is the complement. Throws if the sides overlap or refer
  /// to vertices outside [0, n).
  static DoubleGreedyState from_sides(int step, int n,
                                      std::vector<Vertex> side_a,
                                      std::vector<Vertex> side_b);
};

/// Partition of V into super vertices after `step` edge contractions.
/// Groups are sorted internally and ordered by their minimum vertex.
struct SuperVertexPartition {
  int step = 0;
  std::vector<std::vector<Vertex>> groups;

  int n() const;
};

struct CutResult {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  double value = 0.0;
};

/// Step-by-step record of a double greedy run; steps[t-1] is the state after
/// step t. D2Greedy/RDGreedy emit n steps, SG/SG3 emit n-1 (step 1 places
/// both endpoints of the maximum-weight edge).
struct DoubleGreedyTrace {
  Algorithm algorithm = Algorithm::D2Greedy;
  int n = 0;
  std::vector<DoubleGreedyState> steps;
  CutResult final_cut;
};

/// Step-by-step record of an edge contraction run; n-2 steps, after step t
/// there are n-t super vertices.
struct ContractionTrace {
  Algorithm algorithm = Algorithm::EC;
  int n = 0;
  std::vector<SuperVertexPartition> steps;
  CutResult final_cut;
};

/// Marginal gains of labelling vertex v in the given state: `expand` is
/// f(S u {v}) - f(S) and `shrink` is f(T \ {v}) - f(T), for the cut
/// objective f and T = V \ side_b. Computed in O(n) from incident weight
/// sums. Throws if v is already labelled.
struct GainPair {
  double expand = 0.0;  // a
  double shrink = 0.0;  // b
};

GainPair gains(const WeightedGraph& g, const DoubleGreedyState& state, Vertex v);

/// Deterministic double greedy: processes vertices in ascending index order,
/// expands S when a >= b, otherwise shrinks T.
DoubleGreedyTrace run_d2greedy(const WeightedGraph& g);

/// Randomized double greedy: expands S with probability a'/(a'+b') where
/// a' = max(a,0), b' = max(b,0); expands surely when a' = b' = 0.
DoubleGreedyTrace run_rdgreedy(const WeightedGraph& g, std::uint64_t seed);

/// Sahni-Gonzalez: seeds S1, S2 with the endpoints of the maximum-weight
/// edge (lexicographically smallest on ties), then processes the remaining
/// vertices in ascending order, adding v to S2 iff w(v,S1) > w(v,S2).
DoubleGreedyTrace run_sg(const WeightedGraph& g);

/// SG3: initialized like SG; each step labels the unlabelled vertex with the
/// largest score |w(v,S1) - w(v,S2)| (lowest index on ties) by SG's rule.
DoubleGreedyTrace run_sg3(const WeightedGraph& g);

/// Edge contraction: n-2 times merges the two super vertices joined by the
/// minimum aggregated weight (lexicographically smallest min-vertex pair on
/// ties), summing connecting weights. The two remaining groups form the cut.
ContractionTrace run_ec(const WeightedGraph& g);

/// Debug dump, one line per step: `t | algorithm | descriptor`.
std::string format_trace(const DoubleGreedyTrace& trace);
std::string format_trace(const ContractionTrace& trace);

/// Checks, on random partial states over g, the identity
/// a - b = 2[w(v,S2) - w(v,S1)] between the double greedy gains (evaluated
/// directly from the cut objective) and SG's labelling criterion, and that
/// the two labelling decisions coincide.
struct EquivalenceReport {
  int states = 0;
  double max_abs_deviation = 0.0;  // |(a-b) - 2[w(v,S2)-w(v,S1)]|
  double max_rel_deviation = 0.0;  // scaled by 1 + |a-b|
  int decision_agreements = 0;
  bool all_decisions_agree() const { return decision_agreements == states; }
};

EquivalenceReport check_sg_d2_equivalence(const WeightedGraph& g, int trials,
                                          std::uint64_t seed);

}  // namespace maxcut

#endif  // MAXCUT_ENGINES_HPP
