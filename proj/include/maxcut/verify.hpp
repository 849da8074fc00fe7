#ifndef MAXCUT_VERIFY_HPP
#define MAXCUT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "maxcut/engines.hpp"

namespace maxcut {

/// Tally for one verification suite. Failures carry a short description of
/// the first few offending cases.
struct SuiteReport {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> examples;  // first few failure descriptions

  bool passed() const { return failures == 0; }
  void expect(bool ok, const std::string& what);
};

/// Closed-form counts and intersections versus brute-force enumeration, for
/// all five algorithms on engine-produced states. For each n in
/// [n_min, n_max], `pairs_per_n` random (G', G'') pairs are drawn,
/// alternating between the edge reversal and Gaussian models and cycling
/// through several noise strengths. Every step of every trace pair is
/// checked exactly.
SuiteReport verify_counting(int n_min, int n_max, int pairs_per_n,
                            std::uint64_t seed);

/// common_supervertex_count versus the connected-component count of the
/// bipartite overlap graph, on random valid group-list pairs with
/// 2 <= h <= h_max. Also checks the 1 <= c* <= h bounds.
SuiteReport verify_common_supervertex(int pairs, int h_max, std::uint64_t seed);

/// The SG/D2Greedy labelling identity on random partial states over random
/// Gaussian graphs: a - b = 2[w(v,S2) - w(v,S1)] within 1e-9 relative
/// tolerance and exact decision agreement.
SuiteReport verify_sg_d2_identity(int states, int n, std::uint64_t seed);

/// Random pair of group lists satisfying the common_supervertex_count
/// preconditions: h groups each, equal unions over m vertices, no shared
/// group. Used by verify_common_supervertex and the property tests.
struct GroupListPair {
  std::vector<std::vector<Vertex>> p_groups;
  std::vector<std::vector<Vertex>> q_groups;
};

GroupListPair random_group_list_pair(int h, int m, std::uint64_t seed);

}  // namespace maxcut

#endif  // MAXCUT_VERIFY_HPP
