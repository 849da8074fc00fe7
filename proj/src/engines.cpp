#include "maxcut/engines.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "maxcut/rng.hpp"

namespace maxcut {

namespace {

enum class Side : std::uint8_t { None, A, B };

DoubleGreedyState snapshot(int step, const std::vector<Side>& labels) {
  DoubleGreedyState s;
  s.step = step;
  for (Vertex v = 0; v < static_cast<Vertex>(labels.size()); ++v) {
    switch (labels[v]) {
      case Side::A: s.side_a.push_back(v); break;
      case Side::B: s.side_b.push_back(v); break;
      case Side::None: s.unlabelled.push_back(v); break;
    }
  }
  return s;
}

// Running sums w(v, S1) and w(v, S2) for every vertex, updated in O(n) per
// labelled vertex. Decisions then cost O(1): both double greedy gains reduce
// to deg(v) - 2 w(v, side).
struct IncidentSums {
  std::vector<double> to_a, to_b;

  explicit IncidentSums(int n) : to_a(n, 0.0), to_b(n, 0.0) {}

  void add(const WeightedGraph& g, Vertex labelled, Side side) {
    auto& sums = side == Side::A ? to_a : to_b;
    for (Vertex v = 0; v < g.size(); ++v) sums[v] += g.weight(v, labelled);
  }
};

void finalize_cut(const WeightedGraph& g, const std::vector<Side>& labels,
                  CutResult& out) {
  for (Vertex v = 0; v < static_cast<Vertex>(labels.size()); ++v) {
    (labels[v] == Side::A ? out.side_a : out.side_b).push_back(v);
  }
  out.value = cut_value(g, out.side_a);
}

template <typename DecideExpand>
DoubleGreedyTrace run_double_greedy(const WeightedGraph& g, Algorithm alg,
                                    DecideExpand decide) {
  const int n = g.size();
  DoubleGreedyTrace trace;
  trace.algorithm = alg;
  trace.n = n;
  trace.steps.reserve(n);

  std::vector<Side> labels(n, Side::None);
  IncidentSums sums(n);
  std::vector<double> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.weighted_degree(v);

  for (Vertex v = 0; v < n; ++v) {
    const double a = degree[v] - 2.0 * sums.to_a[v];
    const double b = degree[v] - 2.0 * sums.to_b[v];
    const Side side = decide(a, b) ? Side::A : Side::B;
    labels[v] = side;
    sums.add(g, v, side);
    trace.steps.push_back(snapshot(v + 1, labels));
  }
  finalize_cut(g, labels, trace.final_cut);
  return trace;
}

std::pair<Vertex, Vertex> max_weight_edge(const WeightedGraph& g) {
  Vertex bi = 0, bj = 1;
  double best = g.weight(0, 1);
  for (Vertex i = 0; i < g.size(); ++i) {
    for (Vertex j = i + 1; j < g.size(); ++j) {
      if (g.weight(i, j) > best) {
        best = g.weight(i, j);
        bi = i;
        bj = j;
      }
    }
  }
  return {bi, bj};
}

// Shared by SG and SG3; pick_next returns the vertex to label at each step.
template <typename PickNext>
DoubleGreedyTrace run_sg_family(const WeightedGraph& g, Algorithm alg,
                                PickNext pick_next) {
  const int n = g.size();
  DoubleGreedyTrace trace;
  trace.algorithm = alg;
  trace.n = n;
  trace.steps.reserve(n - 1);

  std::vector<Side> labels(n, Side::None);
  IncidentSums sums(n);

  const auto [x, y] = max_weight_edge(g);
  labels[x] = Side::A;
  labels[y] = Side::B;
  sums.add(g, x, Side::A);
  sums.add(g, y, Side::B);
  trace.steps.push_back(snapshot(1, labels));

  for (int step = 2; step <= n - 1; ++step) {
    const Vertex v = pick_next(labels, sums);
    // Alg. rule: the vertex goes opposite the side it is more attracted to.
    const Side side = sums.to_a[v] > sums.to_b[v] ? Side::B : Side::A;
    labels[v] = side;
    sums.add(g, v, side);
    trace.steps.push_back(snapshot(step, labels));
  }
  finalize_cut(g, labels, trace.final_cut);
  return trace;
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::D2Greedy: return "D2Greedy";
    case Algorithm::RDGreedy: return "RDGreedy";
    case Algorithm::SG: return "SG";
    case Algorithm::SG3: return "SG3";
    case Algorithm::EC: return "EC";
  }
  return "?";
}

Algorithm algorithm_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "d2greedy") return Algorithm::D2Greedy;
  if (lower == "rdgreedy") return Algorithm::RDGreedy;
  if (lower == "sg") return Algorithm::SG;
  if (lower == "sg3") return Algorithm::SG3;
  if (lower == "ec") return Algorithm::EC;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

DoubleGreedyState DoubleGreedyState::from_sides(int step, int n,
                                                std::vector<Vertex> side_a,
                                                std::vector<Vertex> side_b) {
  std::vector<Side> labels(n, Side::None);
  auto place = [&](const std::vector<Vertex>& side, Side which) {
    for (Vertex v : side) {
      if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
      if (labels[v] != Side::None)
        throw std::invalid_argument("vertex labelled twice");
      labels[v] = which;
    }
  };
  place(side_a, Side::A);
  place(side_b, Side::B);
  return snapshot(step, labels);
}

int SuperVertexPartition::n() const {
  int total = 0;
  for (const auto& grp : groups) total += static_cast<int>(grp.size());
  return total;
}

GainPair gains(const WeightedGraph& g, const DoubleGreedyState& state,
               Vertex v) {
  if (v < 0 || v >= g.size()) throw std::out_of_range("vertex index out of range");
  if (!std::binary_search(state.unlabelled.begin(), state.unlabelled.end(), v))
    throw std::invalid_argument("vertex is already labelled");
  double wa = 0.0, wb = 0.0;
  for (Vertex u : state.side_a) wa += g.weight(v, u);
  for (Vertex u : state.side_b) wb += g.weight(v, u);
  const double degree = g.weighted_degree(v);
  return {degree - 2.0 * wa, degree - 2.0 * wb};
}

DoubleGreedyTrace run_d2greedy(const WeightedGraph& g) {
  return run_double_greedy(g, Algorithm::D2Greedy,
                           [](double a, double b) { return a >= b; });
}

DoubleGreedyTrace run_rdgreedy(const WeightedGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  return run_double_greedy(g, Algorithm::RDGreedy, [&rng](double a, double b) {
    const double ap = std::max(a, 0.0);
    const double bp = std::max(b, 0.0);
    if (ap == 0.0 && bp == 0.0) return true;
    return rng.uniform01() < ap / (ap + bp);
  });
}

DoubleGreedyTrace run_sg(const WeightedGraph& g) {
  Vertex cursor = 0;
  return run_sg_family(g, Algorithm::SG,
                       [&cursor](const std::vector<Side>& labels,
                                 const IncidentSums&) {
                         while (labels[cursor] != Side::None) ++cursor;
                         return cursor++;
                       });
}

DoubleGreedyTrace run_sg3(const WeightedGraph& g) {
  return run_sg_family(
      g, Algorithm::SG3,
      [](const std::vector<Side>& labels, const IncidentSums& sums) {
        Vertex best = -1;
        double best_score = -1.0;
        for (Vertex v = 0; v < static_cast<Vertex>(labels.size()); ++v) {
          if (labels[v] != Side::None) continue;
          const double score = std::abs(sums.to_a[v] - sums.to_b[v]);
          if (score > best_score) {
            best_score = score;
            best = v;
          }
        }
        return best;
      });
}

ContractionTrace run_ec(const WeightedGraph& g) {
  const int n = g.size();
  if (n < 3) throw std::invalid_argument("edge contraction needs n >= 3");

  ContractionTrace trace;
  trace.n = n;
  trace.steps.reserve(n - 2);

  // Aggregated weights between active groups; a group is identified by its
  // minimum vertex, and merges keep the smaller id, so iterating ids in
  // ascending order realizes the lexicographic tie rule.
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) w[i][j] = g.weight(i, j);
  std::vector<char> active(n, 1);
  std::vector<std::vector<Vertex>> members(n);
  for (Vertex v = 0; v < n; ++v) members[v] = {v};

  for (int step = 1; step <= n - 2; ++step) {
    Vertex bx = -1, by = -1;
    double best = 0.0;
    for (Vertex i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (Vertex j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        if (bx < 0 || w[i][j] < best) {
          best = w[i][j];
          bx = i;
          by = j;
        }
      }
    }

    for (Vertex k = 0; k < n; ++k) {
      if (!active[k] || k == bx || k == by) continue;
      w[bx][k] += w[by][k];
      w[k][bx] = w[bx][k];
    }
    std::vector<Vertex> merged;
    std::merge(members[bx].begin(), members[bx].end(), members[by].begin(),
               members[by].end(), std::back_inserter(merged));
    members[bx] = std::move(merged);
    members[by].clear();
    active[by] = 0;

    SuperVertexPartition part;
    part.step = step;
    for (Vertex v = 0; v < n; ++v) {
      if (active[v]) part.groups.push_back(members[v]);
    }
    trace.steps.push_back(std::move(part));
  }

  std::vector<Vertex> remaining;
  for (Vertex v = 0; v < n; ++v) {
    if (active[v]) remaining.push_back(v);
  }
  trace.final_cut.side_a = members[remaining[0]];
  trace.final_cut.side_b = members[remaining[1]];
  trace.final_cut.value = cut_value(g, trace.final_cut.side_a);
  return trace;
}

namespace {

void append_set(std::ostringstream& out, const std::vector<Vertex>& s) {
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
}

}  // namespace

std::string format_trace(const DoubleGreedyTrace& trace) {
  std::ostringstream out;
  for (const auto& s : trace.steps) {
    out << s.step << " | " << algorithm_name(trace.algorithm) << " | side_a=";
    append_set(out, s.side_a);
    out << " side_b=";
    append_set(out, s.side_b);
    out << " unlabelled=";
    append_set(out, s.unlabelled);
    out << '\n';
  }
  return out.str();
}

std::string format_trace(const ContractionTrace& trace) {
  std::ostringstream out;
  for (const auto& s : trace.steps) {
    out << s.step << " | " << algorithm_name(trace.algorithm) << " | groups={";
    for (std::size_t i = 0; i < s.groups.size(); ++i) {
      if (i) out << ',';
      append_set(out, s.groups[i]);
    }
    out << "}\n";
  }
  return out.str();
}

EquivalenceReport check_sg_d2_equivalence(const WeightedGraph& g, int trials,
                                          std::uint64_t seed) {
  const int n = g.size();
  Rng rng(seed);
  EquivalenceReport report;

  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;

  for (int t = 0; t < trials; ++t) {
    std::vector<Vertex> side_a, side_b, unlabelled;
    do {
      side_a.clear();
      side_b.clear();
      unlabelled.clear();
      for (Vertex v = 0; v < n; ++v) {
        const double u = rng.uniform01();
        if (u < 1.0 / 3.0)
          side_a.push_back(v);
        else if (u < 2.0 / 3.0)
          side_b.push_back(v);
        else
          unlabelled.push_back(v);
      }
    } while (unlabelled.empty());
    const Vertex v = unlabelled[rng.index(unlabelled.size())];

    // Direct objective evaluation, independent of gains(): a and b as cut
    // value differences with S = side_a, T = V \ side_b.
    std::vector<Vertex> s_plus = side_a;
    s_plus.push_back(v);
    std::vector<Vertex> big_t;
    std::vector<char> in_b(n, 0);
    for (Vertex u : side_b) in_b[u] = 1;
    for (Vertex u = 0; u < n; ++u) {
      if (!in_b[u]) big_t.push_back(u);
    }
    std::vector<Vertex> t_minus;
    for (Vertex u : big_t) {
      if (u != v) t_minus.push_back(u);
    }
    const double a = cut_value(g, s_plus) - cut_value(g, side_a);
    const double b = cut_value(g, t_minus) - cut_value(g, big_t);

    double wa = 0.0, wb = 0.0;
    for (Vertex u : side_a) wa += g.weight(v, u);
    for (Vertex u : side_b) wb += g.weight(v, u);
    const double rhs = 2.0 * (wb - wa);

    const double dev = std::abs((a - b) - rhs);
    report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
    report.max_rel_deviation =
        std::max(report.max_rel_deviation, dev / (1.0 + std::abs(a - b)));
    if ((a >= b) == !(wa > wb)) ++report.decision_agreements;
    ++report.states;
  }
  return report;
}

}  // namespace maxcut
