#include "maxcut/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxcut {

namespace {

void check_oracle_size(int n) {
  if (n < 2 || n > 16)
    throw std::invalid_argument("enumeration oracle supports 2 <= n <= 16");
}

std::uint32_t vertex_mask(const std::vector<Vertex>& vs) {
  std::uint32_t m = 0;
  for (Vertex v : vs) m |= 1u << v;
  return m;
}

template <typename Consistent>
std::vector<std::uint32_t> enumerate_cuts(int n, Consistent consistent) {
  const std::uint32_t full = (n == 32 ? ~0u : (1u << n) - 1);
  std::vector<std::uint32_t> cuts;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (!(mask & 1u)) continue;  // canonical side contains vertex 0
    if (consistent(mask, full)) cuts.push_back(mask);
  }
  return cuts;
}

}  // namespace

double cut_mask_value(const WeightedGraph& g, std::uint32_t mask) {
  double total = 0.0;
  for (Vertex i = 0; i < g.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    for (Vertex j = 0; j < g.size(); ++j) {
      if (!(mask & (1u << j))) total += g.weight(i, j);
    }
  }
  return total;
}

std::vector<std::uint32_t> oracle_feasible_cuts(const DoubleGreedyState& state,
                                                int n) {
  check_oracle_size(n);
  if (state.n() != n) throw std::invalid_argument("state does not cover n vertices");
  const std::uint32_t ma = vertex_mask(state.side_a);
  const std::uint32_t mb = vertex_mask(state.side_b);
  return enumerate_cuts(n, [&](std::uint32_t mask, std::uint32_t full) {
    const std::uint32_t co = full & ~mask;
    const bool identity = (ma & ~mask) == 0 && (mb & ~co) == 0;
    const bool swapped = (mb & ~mask) == 0 && (ma & ~co) == 0;
    return identity || swapped;
  });
}

std::vector<std::uint32_t> oracle_feasible_cuts(const SuperVertexPartition& state,
                                                int n) {
  check_oracle_size(n);
  if (state.n() != n) throw std::invalid_argument("state does not cover n vertices");
  std::vector<std::uint32_t> group_masks;
  group_masks.reserve(state.groups.size());
  for (const auto& grp : state.groups) group_masks.push_back(vertex_mask(grp));
  return enumerate_cuts(n, [&](std::uint32_t mask, std::uint32_t) {
    for (std::uint32_t gm : group_masks) {
      const std::uint32_t inside = mask & gm;
      if (inside != 0 && inside != gm) return false;  // group split by the cut
    }
    return true;
  });
}

namespace {

ExactCount intersection_size(const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return ExactCount::from_uint(count);
}

}  // namespace

ExactCount oracle_intersection(const DoubleGreedyState& s1,
                               const DoubleGreedyState& s2, int n) {
  return intersection_size(oracle_feasible_cuts(s1, n),
                           oracle_feasible_cuts(s2, n));
}

ExactCount oracle_intersection(const SuperVertexPartition& s1,
                               const SuperVertexPartition& s2, int n) {
  return intersection_size(oracle_feasible_cuts(s1, n),
                           oracle_feasible_cuts(s2, n));
}

int overlap_component_count(const std::vector<std::vector<Vertex>>& p_groups,
                            const std::vector<std::vector<Vertex>>& q_groups) {
  const int hp = static_cast<int>(p_groups.size());
  const int hq = static_cast<int>(q_groups.size());
  std::vector<int> parent(hp + hq);
  for (int i = 0; i < hp + hq; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (int i = 0; i < hp; ++i) {
    for (int j = 0; j < hq; ++j) {
      const auto& p = p_groups[i];
      const auto& q = q_groups[j];
      auto ip = p.begin();
      auto iq = q.begin();
      bool overlap = false;
      while (ip != p.end() && iq != q.end()) {
        if (*ip < *iq)
          ++ip;
        else if (*iq < *ip)
          ++iq;
        else {
          overlap = true;
          break;
        }
      }
      if (overlap) unite(i, hp + j);
    }
  }

  int components = 0;
  for (int i = 0; i < hp + hq; ++i) {
    if (find(i) == i) ++components;
  }
  return components;
}

double brute_force_max_cut(const WeightedGraph& g) {
  check_oracle_size(g.size());
  double best = 0.0;
  const std::uint32_t full = (1u << g.size()) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (!(mask & 1u)) continue;
    best = std::max(best, cut_mask_value(g, mask));
  }
  return best;
}

}  // namespace maxcut
