#include "metgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include "metgraph/error.hpp"
#include "metgraph/format.hpp"
#include "metgraph/refinement.hpp"

namespace metgraph {

namespace {

std::vector<bool> reachable_from(const WeightedGraph &g, VertexId start,
                                 std::optional<EdgeId> skip) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const Incidence &inc : g.incidences(v)) {
      if (skip && inc.edge == *skip) continue;
      const Edge &e = g.edge(inc.edge);
      const VertexId w = inc.at_start ? e.v : e.u;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

} // namespace

GraphPtr WeightedGraph::build(std::vector<std::string> vertex_names,
                              const std::vector<EdgeSpec> &edges,
                              double point_tolerance) {
  std::shared_ptr<WeightedGraph> g(new WeightedGraph());
  g->tolerance_ = point_tolerance;
  if (vertex_names.empty()) throw Error(ErrorKind::NoVertices, "graph has no vertices");

  g->names_ = std::move(vertex_names);
  for (VertexId v = 0; v < g->names_.size(); ++v) {
    if (!g->vertex_index_.emplace(g->names_[v], v).second)
      throw Error(ErrorKind::DuplicateName, "vertex '" + g->names_[v] + "' declared twice");
  }

  g->incidence_.resize(g->names_.size());
  std::set<std::pair<VertexId, VertexId>> endpoint_pairs;
  g->edges_.reserve(edges.size());
  for (const EdgeSpec &spec : edges) {
    if (!g->edge_index_.emplace(spec.name, g->edges_.size()).second)
      throw Error(ErrorKind::DuplicateName, "edge '" + spec.name + "' declared twice");
    const auto u = g->find_vertex(spec.u);
    const auto v = g->find_vertex(spec.v);
    if (!u) throw Error(ErrorKind::UnknownVertex, "edge '" + spec.name + "' uses undeclared vertex '" + spec.u + "'");
    if (!v) throw Error(ErrorKind::UnknownVertex, "edge '" + spec.name + "' uses undeclared vertex '" + spec.v + "'");
    if (*u == *v) throw Error(ErrorKind::LoopEdge, "edge '" + spec.name + "' joins '" + spec.u + "' to itself");
    if (!(spec.length > 0.0) || !std::isfinite(spec.length))
      throw Error(ErrorKind::NonpositiveLength, "edge '" + spec.name + "' has length " + format_number(spec.length));
    if (!endpoint_pairs.emplace(std::min(*u, *v), std::max(*u, *v)).second)
      throw Error(ErrorKind::MultiEdge, "edge '" + spec.name + "' repeats the endpoint pair '" + spec.u + "', '" + spec.v + "'");

    const EdgeId id = g->edges_.size();
    g->edges_.push_back(Edge{spec.name, *u, *v, spec.length});
    g->incidence_[*u].push_back(Incidence{id, true});
    g->incidence_[*v].push_back(Incidence{id, false});
  }

  const auto seen = reachable_from(*g, 0, std::nullopt);
  for (VertexId v = 0; v < seen.size(); ++v) {
    if (!seen[v])
      throw Error(ErrorKind::Disconnected, "vertex '" + g->names_[v] + "' is not reachable from '" + g->names_[0] + "'");
  }
  return g;
}

GraphPtr build_graph(std::vector<std::string> vertex_names, const std::vector<EdgeSpec> &edges) {
  return WeightedGraph::build(std::move(vertex_names), edges);
}

std::optional<VertexId> WeightedGraph::find_vertex(std::string_view name) const {
  const auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> WeightedGraph::find_edge(std::string_view name) const {
  const auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> WeightedGraph::edge_between(VertexId a, VertexId b) const {
  for (const Incidence &inc : incidences(a)) {
    const Edge &e = edges_[inc.edge];
    if ((inc.at_start ? e.v : e.u) == b) return inc.edge;
  }
  return std::nullopt;
}

double WeightedGraph::total_length() const {
  double sum = 0.0;
  for (const Edge &e : edges_) sum += e.length;
  return sum;
}

std::size_t WeightedGraph::valence(GraphPoint p) const {
  if (const auto v = vertex_at(p)) return valence(*v);
  return 2;
}

GraphPoint WeightedGraph::vertex_point(VertexId v) const {
  const auto &inc = incidence_.at(v);
  // connected graphs with >= 2 vertices give every vertex an incident edge
  if (inc.empty()) throw Error(ErrorKind::InvalidArgument, "vertex '" + names_[v] + "' has no incident edge");
  const auto best = std::min_element(inc.begin(), inc.end(), [](const Incidence &a, const Incidence &b) {
    return a.edge < b.edge;
  });
  return GraphPoint{best->edge, best->at_start ? 0.0 : edges_[best->edge].length};
}

GraphPoint WeightedGraph::canonical_point(EdgeId e, double t) const {
  if (e >= edges_.size()) throw Error(ErrorKind::UnknownEdge, "edge index " + std::to_string(e));
  const Edge &edge = edges_[e];
  if (!(t >= -tolerance_ && t <= edge.length + tolerance_))
    throw Error(ErrorKind::OffsetOutOfRange,
                "offset " + format_number(t) + " outside [0, " + format_number(edge.length) + "] on edge '" + edge.name + "'");
  if (std::abs(t) <= tolerance_) return vertex_point(edge.u);
  if (std::abs(t - edge.length) <= tolerance_) return vertex_point(edge.v);
  return GraphPoint{e, t};
}

std::optional<VertexId> WeightedGraph::vertex_at(GraphPoint p) const {
  const Edge &edge = edges_.at(p.edge);
  if (std::abs(p.t) <= tolerance_) return edge.u;
  if (std::abs(p.t - edge.length) <= tolerance_) return edge.v;
  return std::nullopt;
}

bool WeightedGraph::same_point(GraphPoint a, GraphPoint b) const {
  const GraphPoint ca = canonical(a);
  const GraphPoint cb = canonical(b);
  return ca.edge == cb.edge && std::abs(ca.t - cb.t) <= tolerance_;
}

std::string WeightedGraph::describe(GraphPoint p) const {
  if (const auto v = vertex_at(p)) return names_[*v];
  return edges_.at(p.edge).name + ":" + format_number(p.t);
}

bool is_bridge(const WeightedGraph &g, EdgeId e) {
  const Edge &edge = g.edge(e);
  return !reachable_from(g, edge.u, e)[edge.v];
}

double path_distance(const GraphPtr &g, GraphPoint x, GraphPoint y) {
  const std::vector<GraphPoint> points{x, y};
  const Refinement ref = refine_at(g, points);
  const WeightedGraph &fine = *ref.fine();
  const VertexId source = ref.fine_vertex(x);
  const VertexId target = ref.fine_vertex(y);

  std::vector<double> dist(fine.vertex_count(), std::numeric_limits<double>::infinity());
  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;
    if (v == target) break;
    for (const Incidence &inc : fine.incidences(v)) {
      const Edge &e = fine.edge(inc.edge);
      const VertexId w = inc.at_start ? e.v : e.u;
      if (d + e.length < dist[w]) {
        dist[w] = d + e.length;
        queue.emplace(dist[w], w);
      }
    }
  }
  return dist[target];
}

} // namespace metgraph
