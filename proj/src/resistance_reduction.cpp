#include "metgraph/resistance_reduction.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "metgraph/error.hpp"
#include "metgraph/format.hpp"
#include "metgraph/potential.hpp"
#include "metgraph/refinement.hpp"

namespace metgraph {

double Resistance::value() const {
  if (infinite_) throw Error(ErrorKind::InvalidArgument, "resistance is infinite");
  return value_;
}

double Resistance::conductance_in_series_with(double length) const {
  return infinite_ ? 0.0 : 1.0 / (length + value_);
}

Resistance edge_deleted_resistance(const GraphPtr &g, EdgeId e) {
  if (is_bridge(*g, e)) return Resistance::infinite();
  std::vector<EdgeSpec> rest;
  rest.reserve(g->edge_count() - 1);
  for (EdgeId k = 0; k < g->edge_count(); ++k) {
    if (k == e) continue;
    const Edge &edge = g->edge(k);
    rest.push_back(EdgeSpec{edge.name, g->vertex_name(edge.u), g->vertex_name(edge.v), edge.length});
  }
  const GraphPtr remainder = WeightedGraph::build(g->vertex_names(), rest, g->point_tolerance());
  const Edge &removed = g->edge(e);
  return Resistance::finite(
      effective_resistance(remainder, remainder->vertex_point(removed.u), remainder->vertex_point(removed.v)));
}

double resistance_on_segment(double length, Resistance deleted, double distance) {
  return distance - deleted.conductance_in_series_with(length) * distance * distance;
}

double resistance_on_segment(const GraphPtr &g, EdgeId e, double t, VertexId toward) {
  g->canonical_point(e, t); // validates the offset
  const Edge &edge = g->edge(e);
  if (toward != edge.u && toward != edge.v)
    throw Error(ErrorKind::InvalidArgument, "vertex '" + g->vertex_name(toward) + "' is not an endpoint of '" + edge.name + "'");
  const double s = std::clamp(toward == edge.u ? t : edge.length - t, 0.0, edge.length);
  return resistance_on_segment(edge.length, edge_deleted_resistance(g, e), s);
}

namespace {

struct WorkEdge {
  std::size_t a;
  std::size_t b;
  double r;
  bool alive = true;
};

class Reducer {
public:
  Reducer(const WeightedGraph &g, std::size_t x, std::size_t y)
      : x_(x), y_(y), vertex_alive_(g.vertex_count(), true) {
    for (const Edge &e : g.edges()) edges_.push_back(WorkEdge{e.u, e.v, e.length});
  }

  double run() {
    while (merge_parallel() || eliminate_one()) {
    }
    const WorkEdge *last = nullptr;
    for (const WorkEdge &e : edges_) {
      if (!e.alive) continue;
      if (last) throw Error(ErrorKind::NotSeriesParallel, "network does not reduce to a single edge");
      last = &e;
    }
    if (!last || !((last->a == x_ && last->b == y_) || (last->a == y_ && last->b == x_)))
      throw Error(ErrorKind::NotSeriesParallel, "network does not reduce to a single terminal edge");
    return last->r;
  }

private:
  bool merge_parallel() {
    bool changed = false;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> first;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      WorkEdge &e = edges_[k];
      if (!e.alive) continue;
      if (e.a == e.b) { // a loop carries no current
        e.alive = false;
        changed = true;
        continue;
      }
      const auto key = std::minmax(e.a, e.b);
      const auto [it, inserted] = first.emplace(key, k);
      if (inserted) continue;
      WorkEdge &keep = edges_[it->second];
      keep.r = keep.r * e.r / (keep.r + e.r);
      e.alive = false;
      changed = true;
    }
    return changed;
  }

  bool eliminate_one() {
    for (std::size_t v = 0; v < vertex_alive_.size(); ++v) {
      if (!vertex_alive_[v] || v == x_ || v == y_) continue;
      std::vector<std::size_t> incident;
      for (std::size_t k = 0; k < edges_.size(); ++k)
        if (edges_[k].alive && (edges_[k].a == v || edges_[k].b == v)) incident.push_back(k);
      if (incident.size() == 0) {
        vertex_alive_[v] = false;
        return true;
      }
      if (incident.size() == 1) {
        edges_[incident[0]].alive = false;
        vertex_alive_[v] = false;
        return true;
      }
      if (incident.size() == 2) {
        WorkEdge &first = edges_[incident[0]];
        WorkEdge &second = edges_[incident[1]];
        const std::size_t p = first.a == v ? first.b : first.a;
        const std::size_t q = second.a == v ? second.b : second.a;
        first = WorkEdge{p, q, first.r + second.r};
        second.alive = false;
        vertex_alive_[v] = false;
        return true;
      }
    }
    return false;
  }

  std::size_t x_;
  std::size_t y_;
  std::vector<bool> vertex_alive_;
  std::vector<WorkEdge> edges_;
};

} // namespace

double series_parallel_resistance(const TwoTerminalNetwork &network) {
  const GraphPtr &g = network.graph;
  if (g->same_point(network.x, network.y))
    throw Error(ErrorKind::InvalidArgument, "terminals coincide at " + g->describe(network.x));
  const std::vector<GraphPoint> terminals{network.x, network.y};
  const Refinement ref = refine_at(g, terminals);
  Reducer reducer(*ref.fine(), ref.fine_vertex(network.x), ref.fine_vertex(network.y));
  return reducer.run();
}

} // namespace metgraph
