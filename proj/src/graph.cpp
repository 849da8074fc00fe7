#include "maxcut/graph.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace maxcut {

WeightedGraph::WeightedGraph(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("graph needs at least 2 vertices");
  w_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

void WeightedGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

void WeightedGraph::set_weight(Vertex i, Vertex j, double w) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::invalid_argument("diagonal weights must stay zero");
  if (!(w >= 0.0)) throw std::invalid_argument("edge weights must be nonnegative");
  w_[static_cast<std::size_t>(i) * n_ + j] = w;
  w_[static_cast<std::size_t>(j) * n_ + i] = w;
}

double WeightedGraph::weighted_degree(Vertex v) const {
  check_vertex(v);
  double sum = 0.0;
  const double* row = &w_[static_cast<std::size_t>(v) * n_];
  for (int j = 0; j < n_; ++j) sum += row[j];
  return sum;
}

void WeightedGraph::check_invariants() const {
  for (int i = 0; i < n_; ++i) {
    if (w_[static_cast<std::size_t>(i) * n_ + i] != 0.0)
      throw std::invalid_argument("nonzero diagonal entry");
    for (int j = i + 1; j < n_; ++j) {
      const double wij = w_[static_cast<std::size_t>(i) * n_ + j];
      const double wji = w_[static_cast<std::size_t>(j) * n_ + i];
      if (wij != wji) throw std::invalid_argument("asymmetric weight matrix");
      if (!(wij >= 0.0)) throw std::invalid_argument("negative edge weight");
    }
  }
}

double cut_value(const WeightedGraph& g, std::span<const Vertex> s) {
  const int n = g.size();
  std::vector<char> in_s(n, 0);
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
    in_s[v] = 1;
  }
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!in_s[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (!in_s[j]) total += g.weight(i, j);
    }
  }
  return total;
}

void save_graph(const WeightedGraph& g, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
  out << g.size() << '\n';
  char buf[64];
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", g.weight(i, j));
      out << i << ' ' << j << ' ' << buf << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

WeightedGraph load_graph(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  int n = 0;
  if (!(in >> n) || n < 2) throw std::runtime_error("bad graph header in " + file.string());
  WeightedGraph g(n);
  std::int64_t lines = 0;
  int i, j;
  double w;
  while (in >> i >> j >> w) {
    if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
      throw std::runtime_error("bad edge line in " + file.string());
    g.set_weight(i, j, w);
    ++lines;
  }
  if (lines != g.edge_count())
    throw std::runtime_error("edge count mismatch in " + file.string());
  g.check_invariants();
  return g;
}

}  // namespace maxcut
