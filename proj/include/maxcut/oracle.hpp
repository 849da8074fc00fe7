#ifndef MAXCUT_ORACLE_HPP
#define MAXCUT_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "maxcut/counting.hpp"
#include "maxcut/engines.hpp"

namespace maxcut {

/// Brute-force enumeration oracles for the closed-form counting operations.
/// Cuts are canonical bitmasks over n <= 16 vertices: the mask is the side
/// containing vertex 0 and never the full set, so each of the 2^(n-1) - 1
/// nontrivial unordered cuts appears exactly once. These routines stay
/// independent of the closed forms they validate.

/// Cut value of the bipartition (mask, complement).
double cut_mask_value(const WeightedGraph& g, std::uint32_t mask);

/// All canonical cut masks consistent with a partial labelling: the two
/// sides must land on opposite sides of the cut, in either orientation.
std::vector<std::uint32_t> oracle_feasible_cuts(const DoubleGreedyState& state,
                                                int n);

/// All canonical cut masks that keep every super vertex whole.
std::vector<std::uint32_t> oracle_feasible_cuts(const SuperVertexPartition& state,
                                                int n);

ExactCount oracle_intersection(const DoubleGreedyState& s1,
                               const DoubleGreedyState& s2, int n);
ExactCount oracle_intersection(const SuperVertexPartition& s1,
                               const SuperVertexPartition& s2, int n);

/// Connected components of the bipartite overlap graph between two group
/// lists (groups adjacent iff they share a vertex). The independent
/// characterization of common_supervertex_count.
int overlap_component_count(const std::vector<std::vector<Vertex>>& p_groups,
                            const std::vector<std::vector<Vertex>>& q_groups);

/// Exhaustive MaxCut optimum for n <= 16, as a sanity bound in tests.
double brute_force_max_cut(const WeightedGraph& g);

}  // namespace maxcut

#endif  // MAXCUT_ORACLE_HPP
