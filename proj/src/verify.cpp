#include "maxcut/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "maxcut/counting.hpp"
#include "maxcut/estimator.hpp"
#include "maxcut/noise.hpp"
#include "maxcut/oracle.hpp"
#include "maxcut/rng.hpp"

namespace maxcut {

void SuiteReport::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failures;
    if (examples.size() < 5) examples.push_back(what);
  }
}

namespace {

ExactCount count_for(Algorithm alg, const DoubleGreedyState& s) {
  if (alg == Algorithm::SG || alg == Algorithm::SG3) return count_sg_family(s);
  return count_double_greedy(s);
}

void check_double_greedy_pair(SuiteReport& report, Algorithm alg,
                              const DoubleGreedyTrace& t1,
                              const DoubleGreedyTrace& t2, int n,
                              const std::string& tag) {
  for (std::size_t i = 0; i < t1.steps.size(); ++i) {
    const auto& s1 = t1.steps[i];
    const auto& s2 = t2.steps[i];
    const auto c1 = count_for(alg, s1);
    const auto c2 = count_for(alg, s2);
    const auto delta = intersect_double_greedy(s1, s2);
    const auto oracle1 =
        ExactCount::from_uint(oracle_feasible_cuts(s1, n).size());
    const auto oracle2 =
        ExactCount::from_uint(oracle_feasible_cuts(s2, n).size());
    const auto oracle_delta = oracle_intersection(s1, s2, n);
    std::ostringstream at;
    at << tag << " " << algorithm_name(alg) << " t=" << s1.step;
    report.expect(c1 == oracle1, at.str() + " |C'| " + c1.to_string() +
                                     " != oracle " + oracle1.to_string());
    report.expect(c2 == oracle2, at.str() + " |C''| " + c2.to_string() +
                                     " != oracle " + oracle2.to_string());
    report.expect(delta == oracle_delta,
                  at.str() + " delta " + delta.to_string() + " != oracle " +
                      oracle_delta.to_string());
    report.expect(delta <= min(c1, c2), at.str() + " delta exceeds min count");
    report.expect(intersect_double_greedy(s2, s1) == delta,
                  at.str() + " intersection not symmetric");
  }
}

void check_ec_pair(SuiteReport& report, const ContractionTrace& t1,
                   const ContractionTrace& t2, int n, const std::string& tag) {
  for (std::size_t i = 0; i < t1.steps.size(); ++i) {
    const auto& s1 = t1.steps[i];
    const auto& s2 = t2.steps[i];
    const auto c1 = count_ec(s1);
    const auto c2 = count_ec(s2);
    const auto delta = intersect_ec(s1, s2);
    const auto oracle1 =
        ExactCount::from_uint(oracle_feasible_cuts(s1, n).size());
    const auto oracle2 =
        ExactCount::from_uint(oracle_feasible_cuts(s2, n).size());
    const auto oracle_delta = oracle_intersection(s1, s2, n);
    std::ostringstream at;
    at << tag << " EC t=" << s1.step;
    report.expect(c1 == oracle1, at.str() + " |C'| " + c1.to_string() +
                                     " != oracle " + oracle1.to_string());
    report.expect(c2 == oracle2, at.str() + " |C''| " + c2.to_string() +
                                     " != oracle " + oracle2.to_string());
    report.expect(delta == oracle_delta,
                  at.str() + " delta " + delta.to_string() + " != oracle " +
                      oracle_delta.to_string());
    report.expect(delta <= min(c1, c2), at.str() + " delta exceeds min count");
    report.expect(intersect_ec(s2, s1) == delta,
                  at.str() + " intersection not symmetric");
  }
}

}  // namespace

SuiteReport verify_counting(int n_min, int n_max, int pairs_per_n,
                            std::uint64_t seed) {
  SuiteReport report;
  report.name = "counting-vs-enumeration";

  constexpr double kFlipLevels[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  constexpr double kSigmaLevels[] = {25.0, 75.0, 125.0, 250.0};

  for (int n = n_min; n <= n_max; ++n) {
    // Anchor the solution-space size and the ordered-count convention to the
    // enumeration oracle once per n.
    const auto unlabelled = DoubleGreedyState::from_sides(0, n, {}, {});
    report.expect(solution_space_size(n) ==
                      ExactCount::from_uint(oracle_feasible_cuts(unlabelled, n).size()),
                  "solution space size mismatch at n=" + std::to_string(n));
    report.expect(count_double_greedy(unlabelled) == solution_space_size(n),
                  "unordered count of the empty state at n=" + std::to_string(n));
    report.expect(count_double_greedy_ordered(unlabelled) ==
                      ExactCount::pow2_minus_one(static_cast<unsigned>(n)),
                  "ordered count of the empty state at n=" + std::to_string(n));

    for (int pair = 0; pair < pairs_per_n; ++pair) {
      const std::uint64_t pair_seed =
          derive_seed(seed, {static_cast<std::uint64_t>(n),
                             static_cast<std::uint64_t>(pair)});
      const bool reversal = pair % 2 == 0 && n % 2 == 0 && n >= 4;

      WeightedGraph g1(2), g2(2);
      std::ostringstream tag;
      if (reversal) {
        const double p = kFlipLevels[(pair / 2) % std::size(kFlipLevels)];
        const auto master =
            gen_bipartite_master(n, 0.2, derive_seed(pair_seed, {0}));
        g1 = flip_noise(master, p, derive_seed(pair_seed, {1}));
        g2 = flip_noise(master, p, derive_seed(pair_seed, {2}));
        tag << "reversal n=" << n << " p=" << p << " pair=" << pair;
      } else {
        const double s = kSigmaLevels[(pair / 2) % std::size(kSigmaLevels)];
        const auto master =
            gen_gaussian_master(n, 600.0, 50.0, derive_seed(pair_seed, {0}));
        g1 = gaussian_noise(master, s, derive_seed(pair_seed, {1}));
        g2 = gaussian_noise(master, s, derive_seed(pair_seed, {2}));
        tag << "gaussian n=" << n << " sigma=" << s << " pair=" << pair;
      }

      check_double_greedy_pair(report, Algorithm::D2Greedy, run_d2greedy(g1),
                               run_d2greedy(g2), n, tag.str());
      check_double_greedy_pair(report, Algorithm::RDGreedy,
                               run_rdgreedy(g1, derive_seed(pair_seed, {3})),
                               run_rdgreedy(g2, derive_seed(pair_seed, {4})), n,
                               tag.str());
      check_double_greedy_pair(report, Algorithm::SG, run_sg(g1), run_sg(g2), n,
                               tag.str());
      check_double_greedy_pair(report, Algorithm::SG3, run_sg3(g1), run_sg3(g2),
                               n, tag.str());
      if (n >= 3) check_ec_pair(report, run_ec(g1), run_ec(g2), n, tag.str());
    }
  }
  return report;
}

GroupListPair random_group_list_pair(int h, int m, std::uint64_t seed) {
  // m must leave real slack: for m = h the only partition is all singletons,
  // and tight m forces shared singletons, so no valid pair would exist.
  if (h < 2 || m < 2 * h) throw std::invalid_argument("need m >= 2h, h >= 2");
  Rng rng(seed);
  const auto draw_partition = [&](std::vector<std::vector<Vertex>>& groups) {
    for (;;) {
      groups.assign(h, {});
      for (Vertex v = 0; v < m; ++v) {
        const int gi = static_cast<int>(rng.index(static_cast<std::size_t>(h)));
        groups[gi].push_back(v);
      }
      const bool all_nonempty =
          std::none_of(groups.begin(), groups.end(),
                       [](const auto& grp) { return grp.empty(); });
      if (all_nonempty) return;
    }
  };

  GroupListPair pair;
  for (;;) {
    draw_partition(pair.p_groups);
    draw_partition(pair.q_groups);
    bool shared = false;
    for (const auto& p : pair.p_groups) {
      for (const auto& q : pair.q_groups) {
        if (p == q) shared = true;
      }
    }
    if (!shared) return pair;
  }
}

SuiteReport verify_common_supervertex(int pairs, int h_max, std::uint64_t seed) {
  SuiteReport report;
  report.name = "common-supervertex-vs-components";

  Rng rng(seed);
  for (int i = 0; i < pairs; ++i) {
    const int h = 2 + static_cast<int>(rng.index(static_cast<std::size_t>(h_max - 1)));
    const int m = 2 * h + static_cast<int>(rng.index(static_cast<std::size_t>(h + 5)));
    const auto pair = random_group_list_pair(
        h, m, derive_seed(seed, {static_cast<std::uint64_t>(i)}));
    const int got = common_supervertex_count(pair.p_groups, pair.q_groups);
    const int expected = overlap_component_count(pair.p_groups, pair.q_groups);
    std::ostringstream at;
    at << "pair=" << i << " h=" << h << " m=" << m;
    report.expect(got == expected, at.str() + " c*=" + std::to_string(got) +
                                       " != components " +
                                       std::to_string(expected));
    report.expect(got >= 1 && got <= h, at.str() + " c* out of [1, h]");
  }
  return report;
}

SuiteReport verify_sg_d2_identity(int states, int n, std::uint64_t seed) {
  SuiteReport report;
  report.name = "sg-d2-labelling-identity";

  const int graphs = std::max(1, states / 50);
  const int per_graph = (states + graphs - 1) / graphs;
  int remaining = states;
  for (int gi = 0; gi < graphs && remaining > 0; ++gi) {
    const auto g = gen_gaussian_master(
        n, 600.0, 50.0, derive_seed(seed, {static_cast<std::uint64_t>(gi), 0}));
    const int batch = std::min(per_graph, remaining);
    const auto rep = check_sg_d2_equivalence(
        g, batch, derive_seed(seed, {static_cast<std::uint64_t>(gi), 1}));
    remaining -= batch;
    std::ostringstream at;
    at << "graph=" << gi;
    report.expect(rep.max_rel_deviation <= 1e-9,
                  at.str() + " identity deviation " +
                      std::to_string(rep.max_rel_deviation));
    report.expect(rep.all_decisions_agree(),
                  at.str() + " labelling decisions diverge");
  }
  return report;
}

}  // namespace maxcut
