#include "metgraph/refinement.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "metgraph/error.hpp"
#include "metgraph/format.hpp"

namespace metgraph {

namespace {

std::string fresh_name(const std::string &base, std::unordered_set<std::string> &taken) {
  std::string name = base;
  while (!taken.insert(name).second) name += "_";
  return name;
}

} // namespace

Refinement::Refinement(GraphPtr graph) : coarse_(graph), fine_(std::move(graph)) {
  origin_.reserve(coarse_->edge_count());
  pieces_.resize(coarse_->edge_count());
  for (EdgeId e = 0; e < coarse_->edge_count(); ++e) {
    origin_.push_back(EdgeOrigin{e, 0.0});
    pieces_[e].push_back(e);
  }
}

GraphPoint Refinement::to_fine(GraphPoint coarse_point) const {
  const GraphPoint p = coarse_->canonical(coarse_point);
  const auto &list = pieces_.at(p.edge);
  // last piece starting at or before p.t
  auto it = std::upper_bound(list.begin(), list.end(), p.t, [this](double t, EdgeId fine_edge) {
    return t < origin_[fine_edge].offset;
  });
  if (it != list.begin()) --it;
  const EdgeId piece = *it;
  const double local = std::clamp(p.t - origin_[piece].offset, 0.0, fine_->edge(piece).length);
  return fine_->canonical_point(piece, local);
}

GraphPoint Refinement::to_coarse(GraphPoint fine_point) const {
  const GraphPoint p = fine_->canonical(fine_point);
  const EdgeOrigin &o = origin_.at(p.edge);
  const double t = std::clamp(o.offset + p.t, 0.0, coarse_->edge(o.parent).length);
  return coarse_->canonical_point(o.parent, t);
}

VertexId Refinement::fine_vertex(GraphPoint coarse_point) const {
  const GraphPoint p = to_fine(coarse_point);
  if (const auto v = fine_->vertex_at(p)) return *v;
  throw Error(ErrorKind::InvalidArgument, "point " + coarse_->describe(coarse_point) + " is not a vertex of the refinement");
}

Refinement refine(const GraphPtr &graph, std::vector<std::vector<double>> cuts) {
  const WeightedGraph &g = *graph;
  cuts.resize(g.edge_count());
  const double tol = g.point_tolerance();

  bool any = false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto &c = cuts[e];
    const double length = g.edge(e).length;
    for (double t : c) {
      if (!std::isfinite(t) || t < -tol || t > length + tol)
        throw Error(ErrorKind::OffsetOutOfRange, "cut " + format_number(t) + " outside edge '" + g.edge(e).name + "'");
    }
    std::sort(c.begin(), c.end());
    std::vector<double> kept;
    for (double t : c) {
      if (t <= tol || t >= length - tol) continue;
      if (!kept.empty() && t - kept.back() <= tol) continue;
      kept.push_back(t);
    }
    c = std::move(kept);
    any = any || !c.empty();
  }
  Refinement result(graph);
  if (!any) return result;

  std::unordered_set<std::string> vertex_names(g.vertex_names().begin(), g.vertex_names().end());
  std::unordered_set<std::string> edge_names;
  for (const Edge &e : g.edges()) edge_names.insert(e.name);

  std::vector<std::string> names = g.vertex_names();
  std::vector<EdgeSpec> specs;
  std::vector<EdgeOrigin> origin;
  std::vector<std::vector<EdgeId>> pieces(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge &edge = g.edge(e);
    const auto &c = cuts[e];
    if (c.empty()) {
      pieces[e].push_back(specs.size());
      origin.push_back(EdgeOrigin{e, 0.0});
      specs.push_back(EdgeSpec{edge.name, g.vertex_name(edge.u), g.vertex_name(edge.v), edge.length});
      continue;
    }
    std::string previous = g.vertex_name(edge.u);
    double start = 0.0;
    for (std::size_t k = 0; k <= c.size(); ++k) {
      const bool last = k == c.size();
      const double end = last ? edge.length : c[k];
      std::string next = last ? g.vertex_name(edge.v)
                              : fresh_name(edge.name + "_" + std::to_string(k + 1), vertex_names);
      if (!last) names.push_back(next);
      pieces[e].push_back(specs.size());
      origin.push_back(EdgeOrigin{e, start});
      specs.push_back(EdgeSpec{fresh_name(edge.name + "_" + std::to_string(k), edge_names), previous, next, end - start});
      previous = std::move(next);
      start = end;
    }
  }
  result.fine_ = WeightedGraph::build(std::move(names), specs, g.point_tolerance());
  result.origin_ = std::move(origin);
  result.pieces_ = std::move(pieces);
  return result;
}

Refinement refine_at(const GraphPtr &graph, std::span<const GraphPoint> points) {
  std::vector<std::vector<double>> cuts(graph->edge_count());
  for (const GraphPoint &point : points) {
    const GraphPoint p = graph->canonical(point);
    if (!graph->vertex_at(p)) cuts[p.edge].push_back(p.t);
  }
  return refine(graph, std::move(cuts));
}

Refinement subdivide_at(const GraphPtr &graph, GraphPoint p) {
  return refine_at(graph, std::span<const GraphPoint>(&p, 1));
}

Refinement refine_uniform(const GraphPtr &graph, int parts) {
  if (parts < 1) throw Error(ErrorKind::InvalidArgument, "subdivision count must be at least 1");
  std::vector<std::vector<double>> cuts(graph->edge_count());
  for (EdgeId e = 0; e < graph->edge_count(); ++e) {
    const double length = graph->edge(e).length;
    for (int k = 1; k < parts; ++k) cuts[e].push_back(length * k / parts);
  }
  return refine(graph, std::move(cuts));
}

Refinement refine_mesh(const GraphPtr &graph, double step, std::span<const GraphPoint> required) {
  if (!(step > 0.0)) throw Error(ErrorKind::InvalidArgument, "mesh step must be positive");
  std::vector<std::vector<double>> anchors(graph->edge_count());
  for (const GraphPoint &point : required) {
    const GraphPoint p = graph->canonical(point);
    if (!graph->vertex_at(p)) anchors[p.edge].push_back(p.t);
  }
  std::vector<std::vector<double>> cuts(graph->edge_count());
  for (EdgeId e = 0; e < graph->edge_count(); ++e) {
    auto stops = anchors[e];
    stops.push_back(0.0);
    stops.push_back(graph->edge(e).length);
    std::sort(stops.begin(), stops.end());
    for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
      const double a = stops[k];
      const double b = stops[k + 1];
      // relative slack so that e.g. 1 / (1/200) gives 200 parts, not 201
      const auto parts = static_cast<long>(std::max(1.0, std::ceil((b - a) / step * (1.0 - 1e-12))));
      if (k > 0) cuts[e].push_back(a);
      for (long j = 1; j < parts; ++j) cuts[e].push_back(a + (b - a) * static_cast<double>(j) / static_cast<double>(parts));
    }
  }
  return refine(graph, std::move(cuts));
}

} // namespace metgraph
