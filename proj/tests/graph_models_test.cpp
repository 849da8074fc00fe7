#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "maxcut/graph.hpp"
#include "maxcut/noise.hpp"
#include "maxcut/rng.hpp"

#include "helpers.hpp"

using namespace maxcut;

TEST_CASE("weighted graph validates its invariants") {
  CHECK_THROWS_AS(WeightedGraph(1), std::invalid_argument);

  WeightedGraph g(3);
  g.set_weight(0, 2, 1.5);
  CHECK(g.weight(2, 0) == 1.5);
  CHECK(g.weight(0, 0) == 0.0);
  CHECK_THROWS_AS(g.set_weight(0, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.set_weight(0, 1, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(g.set_weight(0, 3, 1.0), std::out_of_range);
  CHECK_NOTHROW(g.check_invariants());
}

TEST_CASE("cut value") {
  const auto g = test::triangle_123();
  const std::vector<Vertex> s0 = {0};
  CHECK(cut_value(g, s0) == doctest::Approx(3.0));  // w01 + w02

  const std::vector<Vertex> empty;
  CHECK(cut_value(g, empty) == 0.0);
  const std::vector<Vertex> all = {0, 1, 2};
  CHECK(cut_value(g, all) == 0.0);

  WeightedGraph ones(4);
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = i + 1; j < 4; ++j) ones.set_weight(i, j, 1.0);
  const std::vector<Vertex> half = {0, 1};
  CHECK(cut_value(ones, half) == doctest::Approx(4.0));

  const std::vector<Vertex> bad = {0, 7};
  CHECK_THROWS_AS(cut_value(g, bad), std::out_of_range);
}

TEST_CASE("bipartite master weight bands") {
  const auto g4 = gen_bipartite_master(4, 0.0, 1);
  for (Vertex i = 0; i < 4; ++i) {
    for (Vertex j = i + 1; j < 4; ++j) {
      if (i % 2 == j % 2)
        CHECK(g4.weight(i, j) <= 0.5);  // 8/n^2 = 0.5 at n=4
      else
        CHECK(g4.weight(i, j) >= 0.5);
    }
  }

  const auto g100 = gen_bipartite_master(100, 0.0, 1);
  for (Vertex i = 0; i < 100; ++i) {
    for (Vertex j = i + 1; j < 100; ++j) {
      if (i % 2 == j % 2) {
        CHECK(g100.weight(i, j) >= 0.0);
        CHECK(g100.weight(i, j) <= 0.0008);
      } else {
        CHECK(g100.weight(i, j) >= 1.0 - 0.0008);
        CHECK(g100.weight(i, j) <= 1.0);
      }
    }
  }
}

TEST_CASE("bipartite master flip behaviour and determinism") {
  CHECK_THROWS_AS(gen_bipartite_master(5, 0.2, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_bipartite_master(2, 0.2, 1), std::invalid_argument);

  // p_m = 1 flips every edge of the p_m = 0 base graph.
  const auto base = gen_bipartite_master(8, 0.0, 42);
  const auto flipped = gen_bipartite_master(8, 1.0, 42);
  for (Vertex i = 0; i < 8; ++i)
    for (Vertex j = i + 1; j < 8; ++j)
      CHECK(flipped.weight(i, j) == 1.0 - base.weight(i, j));

  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    const auto g = gen_bipartite_master(10, 0.2, seed);
    CHECK_NOTHROW(g.check_invariants());
    for (Vertex i = 0; i < 10; ++i)
      for (Vertex j = i + 1; j < 10; ++j) {
        CHECK(g.weight(i, j) >= 0.0);
        CHECK(g.weight(i, j) <= 1.0);
      }
    CHECK(gen_bipartite_master(10, 0.2, seed) == g);
  }
  CHECK_FALSE(gen_bipartite_master(10, 0.2, 1) == gen_bipartite_master(10, 0.2, 2));
}

TEST_CASE("flip noise endpoints and involution") {
  const auto g = gen_bipartite_master(10, 0.2, 5);

  CHECK(flip_noise(g, 0.0, 17) == g);

  const auto all = flip_noise(g, 1.0, 17);
  for (Vertex i = 0; i < 10; ++i)
    for (Vertex j = i + 1; j < 10; ++j)
      CHECK(all.weight(i, j) == 1.0 - g.weight(i, j));

  // Same seed applies the same mask; flipping twice restores the graph
  // bit for bit (weights live on the reversal-exact grid).
  const auto once = flip_noise(g, 0.37, 99);
  const auto twice = flip_noise(once, 0.37, 99);
  CHECK(twice == g);

  WeightedGraph wide(3);
  wide.set_weight(0, 1, 2.0);
  CHECK_THROWS_AS(flip_noise(wide, 0.5, 1), std::invalid_argument);
}

TEST_CASE("flip noise empirical rate") {
  const int n = 100;
  const auto g = gen_bipartite_master(n, 0.2, 3);
  const int draws = 200;
  std::int64_t flips = 0;
  for (int d = 0; d < draws; ++d) {
    const auto noisy =
        flip_noise(g, 0.5, derive_seed(1000, {static_cast<std::uint64_t>(d)}));
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (noisy.weight(i, j) != g.weight(i, j)) ++flips;
  }
  const double total = static_cast<double>(draws) * g.edge_count();
  const double rate = flips / total;
  const double sigma = std::sqrt(0.25 / total);
  CHECK(std::abs(rate - 0.5) <= 4.0 * sigma);
}

TEST_CASE("gaussian master") {
  const auto degenerate = gen_gaussian_master(6, 2.5, 0.0, 1);
  for (Vertex i = 0; i < 6; ++i)
    for (Vertex j = i + 1; j < 6; ++j) CHECK(degenerate.weight(i, j) == 2.5);

  // Heavy-tailed draws all land nonnegative after the clamp-to-mu rule.
  const auto clamped = gen_gaussian_master(30, 1.0, 100.0, 7);
  for (Vertex i = 0; i < 30; ++i)
    for (Vertex j = i + 1; j < 30; ++j) CHECK(clamped.weight(i, j) >= 0.0);

  const int n = 100;
  const auto g = gen_gaussian_master(n, 600.0, 50.0, 11);
  CHECK_NOTHROW(g.check_invariants());
  double sum = 0.0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) sum += g.weight(i, j);
  const double mean = sum / static_cast<double>(g.edge_count());
  const double bound = 4.0 * 50.0 / std::sqrt(static_cast<double>(g.edge_count()));
  CHECK(std::abs(mean - 600.0) <= bound);

  CHECK(gen_gaussian_master(n, 600.0, 50.0, 11) == g);
}

TEST_CASE("gaussian noise") {
  const auto g = gen_gaussian_master(12, 600.0, 50.0, 2);
  CHECK(gaussian_noise(g, 0.0, 5) == g);

  WeightedGraph zeros(10);
  const auto noisy = gaussian_noise(zeros, 1.0, 5);
  CHECK_NOTHROW(noisy.check_invariants());
  for (Vertex i = 0; i < 10; ++i)
    for (Vertex j = i + 1; j < 10; ++j) CHECK(noisy.weight(i, j) >= 0.0);
}

TEST_CASE("equal edge fraction") {
  const auto g = gen_bipartite_master(10, 0.2, 1);
  const auto same = equal_edge_fraction(g, g);
  CHECK(same.fraction == 1.0);
  CHECK(same.equal_pairs == same.total_edges);

  WeightedGraph other(12);
  CHECK_THROWS_AS(equal_edge_fraction(g, other), std::invalid_argument);
}

TEST_CASE("equal edge fraction matches p^2 + (1-p)^2") {
  const int n = 100;
  const auto master = gen_bipartite_master(n, 0.2, 9);
  const int trials = 200;
  for (double p : {0.2, 0.5}) {
    double sum = 0.0;
    for (int t = 0; t < trials; ++t) {
      const auto g1 = flip_noise(
          master, p, derive_seed(77, {static_cast<std::uint64_t>(t), 0}));
      const auto g2 = flip_noise(
          master, p, derive_seed(77, {static_cast<std::uint64_t>(t), 1}));
      sum += equal_edge_fraction(g1, g2).fraction;
    }
    const double mean = sum / trials;
    const double q = p * p + (1.0 - p) * (1.0 - p);
    const double sigma = std::sqrt(
        q * (1.0 - q) / (static_cast<double>(trials) * master.edge_count()));
    CHECK(std::abs(mean - q) <= 4.0 * sigma);
  }
}

TEST_CASE("graph file round trip") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "maxcut_io_test";
  fs::create_directories(dir);
  const auto file = dir / "g.graph";

  const auto g = gen_gaussian_master(9, 600.0, 50.0, 21);
  save_graph(g, file);
  const auto loaded = load_graph(file);
  CHECK(loaded == g);  // bit-exact round trip

  {
    std::ofstream bad(dir / "bad.graph");
    bad << "3\n0 1 1.0\n";  // missing edges
  }
  CHECK_THROWS_AS(load_graph(dir / "bad.graph"), std::runtime_error);
  CHECK_THROWS_AS(load_graph(dir / "missing.graph"), std::runtime_error);
  fs::remove_all(dir);
}

TEST_CASE("planted bipartition is the even side") {
  CHECK(planted_bipartition(6) == std::vector<Vertex>{0, 2, 4});
}
