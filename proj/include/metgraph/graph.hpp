#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace metgraph {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Default tolerance for deciding that two points on an edge coincide.
inline constexpr double kPointTolerance = 1e-12;

/// An edge as declared: endpoints by name.
struct EdgeSpec {
  std::string name;
  std::string u;
  std::string v;
  double length = 0.0;
};

/// A validated edge. The arclength coordinate t in [0, length] runs from u to v.
struct Edge {
  std::string name;
  VertexId u = 0;
  VertexId v = 0;
  double length = 0.0;

  double weight() const { return 1.0 / length; }
};

/// A location on the metrized graph: an edge plus an arclength offset from
/// the edge's first endpoint. Vertices have a single canonical form, see
/// WeightedGraph::vertex_point.
struct GraphPoint {
  EdgeId edge = 0;
  double t = 0.0;

  friend auto operator<=>(const GraphPoint &, const GraphPoint &) = default;
};

/// One end of an edge seen from a vertex.
struct Incidence {
  EdgeId edge = 0;
  bool at_start = true; // the vertex is the edge's u endpoint
};

class WeightedGraph;
using GraphPtr = std::shared_ptr<const WeightedGraph>;

/// A model of a metrized graph: named vertices, edges with positive lengths,
/// no loops, no multiple edges, connected. Immutable once built.
class WeightedGraph {
public:
  /// Validates and builds. Throws Error (LoopEdge, MultiEdge,
  /// NonpositiveLength, Disconnected, NoVertices, DuplicateName,
  /// UnknownVertex); the message names the offending element.
  static GraphPtr build(std::vector<std::string> vertex_names,
                        const std::vector<EdgeSpec> &edges,
                        double point_tolerance = kPointTolerance);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string &vertex_name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string> &vertex_names() const { return names_; }
  const Edge &edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incidences(VertexId v) const { return incidence_.at(v); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  /// Edge joining a and b, if any.
  std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;

  double point_tolerance() const { return tolerance_; }
  double total_length() const;
  std::size_t valence(VertexId v) const { return incidence_.at(v).size(); }
  /// Valence of an arbitrary point; interior points have valence 2.
  std::size_t valence(GraphPoint p) const;

  /// Canonical representation of vertex v: the smallest incident edge, with
  /// t = 0 if v is its first endpoint and t = L_e otherwise.
  GraphPoint vertex_point(VertexId v) const;
  /// Snaps offsets within tolerance of an endpoint to the vertex's canonical
  /// form. Throws OffsetOutOfRange (or UnknownEdge).
  GraphPoint canonical_point(EdgeId e, double t) const;
  GraphPoint canonical(GraphPoint p) const { return canonical_point(p.edge, p.t); }
  /// The vertex at p, if p is (within tolerance) a vertex.
  std::optional<VertexId> vertex_at(GraphPoint p) const;
  bool same_point(GraphPoint a, GraphPoint b) const;

  /// "name" for vertices, "edge:t" for interior points.
  std::string describe(GraphPoint p) const;

private:
  WeightedGraph() = default;

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  double tolerance_ = kPointTolerance;
};

GraphPtr build_graph(std::vector<std::string> vertex_names,
                     const std::vector<EdgeSpec> &edges);

inline double total_length(const WeightedGraph &g) { return g.total_length(); }
inline std::size_t valence(const WeightedGraph &g, VertexId v) { return g.valence(v); }
inline GraphPoint canonical_point(const WeightedGraph &g, EdgeId e, double t) {
  return g.canonical_point(e, t);
}

/// True iff deleting the open interior of e disconnects the graph.
bool is_bridge(const WeightedGraph &g, EdgeId e);

/// Shortest-path distance between two arbitrary points.
double path_distance(const GraphPtr &g, GraphPoint x, GraphPoint y);

/// #E - #V + 1.
inline std::size_t cycle_space_rank(const WeightedGraph &g) {
  return g.edge_count() + 1 - g.vertex_count();
}

} // namespace metgraph
