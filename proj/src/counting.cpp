#include "maxcut/counting.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace maxcut {

ExactCount ExactCount::from_uint(unsigned long long v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return ExactCount(z);
}

ExactCount ExactCount::pow2(unsigned exponent) {
  mpz_class z = 1;
  z <<= exponent;
  return ExactCount(z);
}

ExactCount ExactCount::pow2_minus_one(unsigned exponent) {
  mpz_class z = 1;
  z <<= exponent;
  return ExactCount(z - 1);
}

double ExactCount::log2() const {
  if (v_ == 0) throw std::domain_error("log2 of zero count");
  signed long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, v_.get_mpz_t());
  // mantissa in [0.5, 1); exact 0.5 for powers of two, so log2 is exact there.
  return static_cast<double>(exp) + std::log2(mantissa);
}

ExactCount solution_space_size(int n) {
  if (n < 2) throw std::invalid_argument("solution space needs n >= 2");
  return ExactCount::pow2_minus_one(static_cast<unsigned>(n - 1));
}

ExactCount count_sg_family(const DoubleGreedyState& state) {
  if (state.side_a.empty() || state.side_b.empty())
    throw std::invalid_argument("SG-family state must have both sides seeded");
  return ExactCount::pow2(static_cast<unsigned>(state.unlabelled.size()));
}

ExactCount count_double_greedy(const DoubleGreedyState& state) {
  const auto k = static_cast<unsigned>(state.unlabelled.size());
  const bool a_empty = state.side_a.empty();
  const bool b_empty = state.side_b.empty();
  if (!a_empty && !b_empty) return ExactCount::pow2(k);
  if (a_empty && b_empty) {
    if (k < 2) throw std::invalid_argument("state covers fewer than 2 vertices");
    return ExactCount::pow2_minus_one(k - 1);
  }
  return ExactCount::pow2_minus_one(k);
}

ExactCount count_double_greedy_ordered(const DoubleGreedyState& state) {
  const auto k = static_cast<unsigned>(state.unlabelled.size());
  if (!state.side_a.empty() && !state.side_b.empty()) return ExactCount::pow2(k);
  return ExactCount::pow2_minus_one(k);
}

namespace {

bool sorted_disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  auto it_a = a.begin();
  auto it_b = b.begin();
  while (it_a != a.end() && it_b != b.end()) {
    if (*it_a < *it_b)
      ++it_a;
    else if (*it_b < *it_a)
      ++it_b;
    else
      return false;
  }
  return true;
}

std::size_t sorted_intersection_size(const std::vector<Vertex>& a,
                                     const std::vector<Vertex>& b) {
  std::size_t count = 0;
  auto it_a = a.begin();
  auto it_b = b.begin();
  while (it_a != a.end() && it_b != b.end()) {
    if (*it_a < *it_b)
      ++it_a;
    else if (*it_b < *it_a)
      ++it_b;
    else {
      ++count;
      ++it_a;
      ++it_b;
    }
  }
  return count;
}

}  // namespace

ExactCount intersect_double_greedy(const DoubleGreedyState& s1,
                                   const DoubleGreedyState& s2) {
  if (s1.n() != s2.n())
    throw std::invalid_argument("states cover different vertex counts");
  if (s1.step != s2.step)
    throw std::invalid_argument("states belong to different steps");

  const auto l = static_cast<unsigned>(
      sorted_intersection_size(s1.unlabelled, s2.unlabelled));

  // An orientation is feasible iff merging the aligned sides causes no
  // vertex to be required on both sides of the cut.
  const bool identity_ok = sorted_disjoint(s1.side_a, s2.side_b) &&
                           sorted_disjoint(s1.side_b, s2.side_a);
  const bool swapped_ok = sorted_disjoint(s1.side_a, s2.side_a) &&
                          sorted_disjoint(s1.side_b, s2.side_b);
  if (!identity_ok && !swapped_ok) return ExactCount::zero();

  const auto completions = [&](bool swapped) {
    const bool merged_a_empty =
        s1.side_a.empty() && (swapped ? s2.side_b.empty() : s2.side_a.empty());
    const bool merged_b_empty =
        s1.side_b.empty() && (swapped ? s2.side_a.empty() : s2.side_b.empty());
    if (merged_a_empty && merged_b_empty) {
      // Both states fully unlabelled; l = n and all nontrivial cuts remain.
      return ExactCount::pow2_minus_one(l - 1);
    }
    if (merged_a_empty || merged_b_empty) return ExactCount::pow2_minus_one(l);
    return ExactCount::pow2(l);
  };

  if (identity_ok && swapped_ok) {
    const bool s1_unlabelled = s1.side_a.empty() && s1.side_b.empty();
    const bool s2_unlabelled = s2.side_a.empty() && s2.side_b.empty();
    // With one state unconstrained both orientations describe the same cut
    // family; otherwise the labelled sets are disjoint and the two
    // orientations contribute disjoint families.
    if (s1_unlabelled || s2_unlabelled) return completions(false);
    return completions(false) + completions(true);
  }
  return completions(identity_ok ? false : true);
}

ExactCount count_ec(const SuperVertexPartition& state) {
  const auto k = state.groups.size();
  if (k < 2) throw std::invalid_argument("EC state needs at least 2 groups");
  return ExactCount::pow2_minus_one(static_cast<unsigned>(k - 1));
}

namespace {

// Validates the common_supervertex_count preconditions and returns the
// number of ground-set vertices. Groups must be sorted.
int validate_group_lists(const std::vector<std::vector<Vertex>>& p_groups,
                         const std::vector<std::vector<Vertex>>& q_groups) {
  if (p_groups.size() != q_groups.size())
    throw std::invalid_argument("group lists differ in length");
  if (p_groups.size() < 2)
    throw std::invalid_argument("need at least 2 groups per list");

  Vertex max_v = -1;
  for (const auto* list : {&p_groups, &q_groups}) {
    for (const auto& grp : *list) {
      if (grp.empty()) throw std::invalid_argument("empty super vertex");
      for (Vertex v : grp) max_v = std::max(max_v, v);
    }
  }
  const int n = max_v + 1;

  std::vector<char> seen_p(n, 0), seen_q(n, 0);
  for (const auto& grp : p_groups) {
    for (Vertex v : grp) {
      if (v < 0) throw std::invalid_argument("negative vertex index");
      if (seen_p[v]) throw std::invalid_argument("groups in P overlap");
      seen_p[v] = 1;
    }
  }
  for (const auto& grp : q_groups) {
    for (Vertex v : grp) {
      if (v < 0) throw std::invalid_argument("negative vertex index");
      if (seen_q[v]) throw std::invalid_argument("groups in Q overlap");
      seen_q[v] = 1;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (seen_p[v] != seen_q[v])
      throw std::invalid_argument("group lists cover different vertex sets");
  }
  for (const auto& p : p_groups) {
    for (const auto& q : q_groups) {
      if (p == q) throw std::invalid_argument("group lists share a super vertex");
    }
  }
  return n;
}

}  // namespace

int common_supervertex_count(const std::vector<std::vector<Vertex>>& p_groups,
                             const std::vector<std::vector<Vertex>>& q_groups) {
  const int n = validate_group_lists(p_groups, q_groups);
  const auto h = p_groups.size();

  // Vertex -> owning group index on each side.
  std::vector<int> p_of(n, -1), q_of(n, -1);
  for (std::size_t i = 0; i < h; ++i) {
    for (Vertex v : p_groups[i]) p_of[v] = static_cast<int>(i);
    for (Vertex v : q_groups[i]) q_of[v] = static_cast<int>(i);
  }

  std::vector<char> p_used(h, 0), q_used(h, 0);
  std::vector<char> in_p(n, 0), in_q(n, 0);

  int common = 0;
  for (std::size_t seed = 0; seed < h; ++seed) {
    if (p_used[seed]) continue;

    // Grow candidate super vertices from this seed until they coincide.
    std::deque<Vertex> pending_p, pending_q;  // vertices added on one side only
    std::size_t p_size = 0, q_size = 0;
    auto add_p = [&](std::size_t gi) {
      p_used[gi] = 1;
      for (Vertex v : p_groups[gi]) {
        in_p[v] = 1;
        ++p_size;
        pending_p.push_back(v);
      }
    };
    auto add_q = [&](std::size_t gi) {
      q_used[gi] = 1;
      for (Vertex v : q_groups[gi]) {
        in_q[v] = 1;
        ++q_size;
        pending_q.push_back(v);
      }
    };

    add_p(seed);
    add_q(static_cast<std::size_t>(q_of[p_groups[seed].front()]));
    while (true) {
      // Extend P by the unique group covering a vertex Q has but P lacks,
      // then symmetrically; stop once the merged candidates are equal.
      while (!pending_q.empty() && in_p[pending_q.front()]) pending_q.pop_front();
      if (!pending_q.empty()) add_p(static_cast<std::size_t>(p_of[pending_q.front()]));
      while (!pending_p.empty() && in_q[pending_p.front()]) pending_p.pop_front();
      if (!pending_p.empty()) add_q(static_cast<std::size_t>(q_of[pending_p.front()]));

      while (!pending_q.empty() && in_p[pending_q.front()]) pending_q.pop_front();
      while (!pending_p.empty() && in_q[pending_p.front()]) pending_p.pop_front();
      if (pending_p.empty() && pending_q.empty() && p_size == q_size) {
        ++common;
        break;
      }
    }
  }
  return common;
}

ExactCount intersect_ec(const SuperVertexPartition& s1,
                        const SuperVertexPartition& s2) {
  if (s1.groups.empty() || s2.groups.empty())
    throw std::invalid_argument("partition has no groups");
  if (s1.n() != s2.n())
    throw std::invalid_argument("partitions cover different vertex counts");
  if (s1.groups.size() != s2.groups.size())
    throw std::invalid_argument("partitions have different group counts");

  // Groups are ordered by minimum vertex, and disjoint groups have distinct
  // minima, so both lists are sorted lexicographically and the identical
  // groups fall out of a single merge pass.
  std::vector<std::vector<Vertex>> p_rem, q_rem;
  unsigned l = 0;
  std::size_t i = 0, j = 0;
  while (i < s1.groups.size() && j < s2.groups.size()) {
    if (s1.groups[i] == s2.groups[j]) {
      ++l;
      ++i;
      ++j;
    } else if (s1.groups[i] < s2.groups[j]) {
      p_rem.push_back(s1.groups[i++]);
    } else {
      q_rem.push_back(s2.groups[j++]);
    }
  }
  for (; i < s1.groups.size(); ++i) p_rem.push_back(s1.groups[i]);
  for (; j < s2.groups.size(); ++j) q_rem.push_back(s2.groups[j]);

  const int c_star = p_rem.empty()
                         ? 0
                         : common_supervertex_count(p_rem, q_rem);
  return ExactCount::pow2_minus_one(static_cast<unsigned>(c_star) + l - 1);
}

}  // namespace maxcut
