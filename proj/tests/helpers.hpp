#ifndef MAXCUT_TESTS_HELPERS_HPP
#define MAXCUT_TESTS_HELPERS_HPP

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "maxcut/engines.hpp"

namespace maxcut::test {

inline WeightedGraph triangle_123() {
  // w01=1, w02=2, w12=3: the running three-vertex example.
  WeightedGraph g(3);
  g.set_weight(0, 1, 1.0);
  g.set_weight(0, 2, 2.0);
  g.set_weight(1, 2, 3.0);
  return g;
}

inline bool sorted_and_unique(const std::vector<Vertex>& v) {
  return std::is_sorted(v.begin(), v.end()) &&
         std::adjacent_find(v.begin(), v.end()) == v.end();
}

inline void require_valid_state(const DoubleGreedyState& s, int n) {
  REQUIRE(sorted_and_unique(s.side_a));
  REQUIRE(sorted_and_unique(s.side_b));
  REQUIRE(sorted_and_unique(s.unlabelled));
  std::vector<char> seen(n, 0);
  for (const auto* part : {&s.side_a, &s.side_b, &s.unlabelled}) {
    for (Vertex v : *part) {
      REQUIRE(v >= 0);
      REQUIRE(v < n);
      REQUIRE(!seen[v]);
      seen[v] = 1;
    }
  }
  REQUIRE(s.n() == n);
}

inline void require_valid_trace(const DoubleGreedyTrace& t) {
  const int n = t.n;
  const bool sg_family =
      t.algorithm == Algorithm::SG || t.algorithm == Algorithm::SG3;
  REQUIRE(static_cast<int>(t.steps.size()) == (sg_family ? n - 1 : n));
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    REQUIRE(s.step == static_cast<int>(i) + 1);
    require_valid_state(s, n);
    const int expected_unlabelled = sg_family ? n - s.step - 1 : n - s.step;
    REQUIRE(static_cast<int>(s.unlabelled.size()) == expected_unlabelled);
  }
  REQUIRE(t.final_cut.side_a.size() + t.final_cut.side_b.size() ==
          static_cast<std::size_t>(n));
}

inline void require_valid_trace(const ContractionTrace& t) {
  const int n = t.n;
  REQUIRE(static_cast<int>(t.steps.size()) == n - 2);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    REQUIRE(s.step == static_cast<int>(i) + 1);
    REQUIRE(static_cast<int>(s.groups.size()) == n - s.step);
    std::vector<char> seen(n, 0);
    Vertex last_min = -1;
    for (const auto& grp : s.groups) {
      REQUIRE(!grp.empty());
      REQUIRE(sorted_and_unique(grp));
      REQUIRE(grp.front() > last_min);  // groups ordered by minimum vertex
      last_min = grp.front();
      for (Vertex v : grp) {
        REQUIRE(v >= 0);
        REQUIRE(v < n);
        REQUIRE(!seen[v]);
        seen[v] = 1;
      }
    }
    REQUIRE(s.n() == n);
  }
}

}  // namespace maxcut::test

#endif  // MAXCUT_TESTS_HELPERS_HPP
