// Graph builders, random generators and brute-force oracles shared by the
// unit and acceptance suites.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "metgraph/graph.hpp"

namespace metgraph::testing {

inline std::string vname(std::size_t i) { return "v" + std::to_string(i); }

inline GraphPtr segment(double length = 1.0) {
  return build_graph({"A", "B"}, {{"AB", "A", "B", length}});
}

/// Circle of the given total length cut into `pieces` equal edges.
inline GraphPtr circle(std::size_t pieces = 3, double length = 1.0) {
  std::vector<std::string> names;
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < pieces; ++i) names.push_back(vname(i));
  for (std::size_t i = 0; i < pieces; ++i)
    edges.push_back({"e" + std::to_string(i), vname(i), vname((i + 1) % pieces), length / static_cast<double>(pieces)});
  return build_graph(names, edges);
}

/// The star P, Q, R, S with PQ = QS = 1/2 and RQ = 1 (arrows into/out of Q as
/// in the classic worked example).
inline GraphPtr star() {
  return build_graph({"P", "Q", "R", "S"}, {{"PQ", "P", "Q", 0.5}, {"QS", "Q", "S", 0.5}, {"RQ", "R", "Q", 1.0}});
}

inline GraphPtr complete(std::size_t n, double length = 1.0) {
  std::vector<std::string> names;
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) names.push_back(vname(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({vname(i) + vname(j), vname(i), vname(j), length});
  return build_graph(names, edges);
}

/// Three paths between A and B, each made of two edges of half its length.
inline GraphPtr theta(double a = 1.0, double b = 1.0, double c = 1.0) {
  return build_graph({"A", "B", "C", "D", "E"}, {{"AC", "A", "C", a / 2},
                                                 {"CB", "C", "B", a / 2},
                                                 {"AD", "A", "D", b / 2},
                                                 {"DB", "D", "B", b / 2},
                                                 {"AE", "A", "E", c / 2},
                                                 {"EB", "E", "B", c / 2}});
}

/// A circle of length 1 (three edges) with a pendant tail of length 1/2.
inline GraphPtr circle_with_tail() {
  return build_graph({"A", "B", "C", "T"}, {{"AB", "A", "B", 1.0 / 3},
                                            {"BC", "B", "C", 1.0 / 3},
                                            {"CA", "C", "A", 1.0 / 3},
                                            {"AT", "A", "T", 0.5}});
}

struct NamedGraph {
  std::string name;
  GraphPtr graph;
};

/// Small fixed topologies of total length O(1).
inline std::vector<NamedGraph> topologies() {
  return {{"segment", segment()},          {"circle", circle(3)}, {"star", star()},
          {"k4", complete(4, 0.25)},      {"theta", theta()},    {"circle_with_tail", circle_with_tail()},
          {"k5", complete(5, 0.2)}};
}

/// Random connected simple graph: a random spanning tree plus extra edges.
inline GraphPtr random_graph(std::mt19937_64 &rng, std::size_t max_vertices = 12, std::size_t max_edges = 20) {
  std::uniform_int_distribution<std::size_t> vertex_count(2, max_vertices);
  std::uniform_real_distribution<double> length(0.1, 2.0);
  const std::size_t n = vertex_count(rng);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(vname(i));
  std::vector<EdgeSpec> edges;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  auto add = [&](std::size_t a, std::size_t b) {
    used[a][b] = used[b][a] = true;
    // random orientation
    if (rng() % 2) std::swap(a, b);
    edges.push_back({"e" + std::to_string(edges.size()), vname(a), vname(b), length(rng)});
  };
  for (std::size_t i = 1; i < n; ++i) add(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i);
  const std::size_t cap = std::min(max_edges, n * (n - 1) / 2);
  const std::size_t target = std::uniform_int_distribution<std::size_t>(n - 1, cap)(rng);
  for (std::size_t tries = 0; edges.size() < target && tries < 1000; ++tries) {
    const std::size_t a = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const std::size_t b = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    if (a != b && !used[a][b]) add(a, b);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return build_graph(names, edges);
}

inline GraphPtr random_tree(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_real_distribution<double> length(0.1, 2.0);
  std::vector<std::string> names;
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) names.push_back(vname(i));
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    edges.push_back({"e" + std::to_string(i), vname(parent), vname(i), length(rng)});
  }
  return build_graph(names, edges);
}

/// Uniformly chosen edge, then a uniform offset; vertices are hit with
/// probability ~1/4 so that both cases get exercised.
inline GraphPoint random_point(std::mt19937_64 &rng, const WeightedGraph &g) {
  const EdgeId e = std::uniform_int_distribution<EdgeId>(0, g.edge_count() - 1)(rng);
  const double length = g.edge(e).length;
  switch (std::uniform_int_distribution<int>(0, 7)(rng)) {
  case 0: return g.canonical_point(e, 0.0);
  case 1: return g.canonical_point(e, length);
  default: return g.canonical_point(e, std::uniform_real_distribution<double>(0.05, 0.95)(rng) * length);
  }
}

/// A two-terminal series-parallel network with its terminals.
struct SeriesParallel {
  GraphPtr graph;
  GraphPoint source;
  GraphPoint sink;
  double expected = 0.0; // resistance from the composition tree
};

/// Random series-parallel composition of `leaves` resistors. Parallel copies
/// between the same vertex pair get an extra midpoint vertex (series split)
/// so that the realized model is simple.
inline SeriesParallel random_series_parallel(std::mt19937_64 &rng, std::size_t leaves) {
  struct Multi {
    std::size_t a, b;
    double r;
  };
  std::uniform_real_distribution<double> length(0.1, 2.0);
  std::size_t next_vertex = 2;
  // recursive build between terminals s and t
  std::vector<Multi> out;
  struct Builder {
    std::mt19937_64 &rng;
    std::uniform_real_distribution<double> &length;
    std::size_t &next_vertex;
    std::vector<Multi> &out;
    double build(std::size_t s, std::size_t t, std::size_t leaves) {
      if (leaves == 1) {
        const double r = length(rng);
        out.push_back({s, t, r});
        return r;
      }
      const std::size_t left = std::uniform_int_distribution<std::size_t>(1, leaves - 1)(rng);
      if (rng() % 2) {
        const std::size_t mid = next_vertex++;
        return build(s, mid, left) + build(mid, t, leaves - left);
      }
      const double r1 = build(s, t, left);
      const double r2 = build(s, t, leaves - left);
      return r1 * r2 / (r1 + r2);
    }
  } builder{rng, length, next_vertex, out};
  const double expected = builder.build(0, 1, leaves);

  std::vector<EdgeSpec> edges;
  std::size_t vertex_total = next_vertex;
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  auto key = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  auto taken = [&](std::size_t a, std::size_t b) { return std::find(seen.begin(), seen.end(), key(a, b)) != seen.end(); };
  for (const Multi &m : out) {
    if (!taken(m.a, m.b)) {
      seen.push_back(key(m.a, m.b));
      edges.push_back({"e" + std::to_string(edges.size()), vname(m.a), vname(m.b), m.r});
    } else {
      const std::size_t mid = vertex_total++;
      const double split = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
      edges.push_back({"e" + std::to_string(edges.size()), vname(m.a), vname(mid), m.r * split});
      edges.push_back({"e" + std::to_string(edges.size()), vname(mid), vname(m.b), m.r * (1 - split)});
      seen.push_back(key(m.a, mid));
      seen.push_back(key(mid, m.b));
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vertex_total; ++i) names.push_back(vname(i));
  GraphPtr g = build_graph(names, edges);
  return SeriesParallel{g, g->vertex_point(0), g->vertex_point(1), expected};
}

/// Floyd-Warshall on the vertices of a model (brute-force distance oracle).
inline std::vector<std::vector<double>> all_pairs_distance(const WeightedGraph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, std::numeric_limits<double>::infinity()));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const Edge &e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = std::min(d[e.u][e.v], e.length);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Composite Gauss-Legendre (5 nodes per panel) quadrature on [a, b].
template <class F> double gauss_legendre(F &&f, double a, double b, int panels = 64) {
  static constexpr double nodes[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                      0.9061798459386640};
  static constexpr double weights[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                        0.2369268850561891, 0.2369268850561891};
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int k = 0; k < 5; ++k) sum += weights[k] * f(mid + 0.5 * h * nodes[k]);
  }
  return 0.5 * h * sum;
}

} // namespace metgraph::testing
