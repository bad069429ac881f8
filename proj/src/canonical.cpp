#include "metgraph/canonical.hpp"

#include <vector>

#include "metgraph/refinement.hpp"
#include "metgraph/resistance_reduction.hpp"

namespace metgraph {

GraphMeasure canonical_measure(const GraphPtr &g) {
  std::vector<Atom> atoms;
  for (VertexId v = 0; v < g->vertex_count(); ++v)
    atoms.push_back(Atom{g->vertex_point(v), 1.0 - 0.5 * static_cast<double>(g->valence(v))});
  std::vector<Polynomial> densities(g->edge_count());
  for (EdgeId e = 0; e < g->edge_count(); ++e) {
    const double c = edge_deleted_resistance(g, e).conductance_in_series_with(g->edge(e).length);
    if (c != 0.0) densities[e] = Polynomial::constant(c);
  }
  return GraphMeasure(g, std::move(atoms), std::move(densities));
}

double edge_resistance(const GraphPtr &g, EdgeId e) {
  const Edge &edge = g->edge(e);
  return effective_resistance(g, g->vertex_point(edge.u), g->vertex_point(edge.v));
}

double foster_sum(const GraphPtr &g) {
  double sum = 0.0;
  for (EdgeId e = 0; e < g->edge_count(); ++e) sum += edge_resistance(g, e) / g->edge(e).length;
  return sum;
}

double cycle_rank_sum(const GraphPtr &g) {
  double sum = 0.0;
  for (EdgeId e = 0; e < g->edge_count(); ++e) {
    const double length = g->edge(e).length;
    sum += length * edge_deleted_resistance(g, e).conductance_in_series_with(length);
  }
  return sum;
}

RefinedFunction resistance_profile(const GraphPtr &g, GraphPoint y) {
  Refinement ref = subdivide_at(g, y);
  const GraphPtr &fine = ref.fine();
  const GraphPoint anchor = ref.to_fine(y);

  std::vector<double> at_vertex(fine->vertex_count());
  for (VertexId v = 0; v < fine->vertex_count(); ++v)
    at_vertex[v] = effective_resistance(fine, fine->vertex_point(v), anchor);

  std::vector<Polynomial> pieces;
  pieces.reserve(fine->edge_count());
  for (EdgeId e = 0; e < fine->edge_count(); ++e) {
    const Edge &edge = fine->edge(e);
    const double length = edge.length;
    const double start = at_vertex[edge.u];
    const double end = at_vertex[edge.v];
    const double middle = effective_resistance(fine, GraphPoint{e, 0.5 * length}, anchor);
    const double c2 = 2.0 * (start - 2.0 * middle + end) / (length * length);
    const double c1 = (end - start) / length - c2 * length;
    pieces.push_back(Polynomial({start, c1, c2}));
  }
  PiecewisePolyFunction profile(fine, std::move(pieces));
  return RefinedFunction{std::move(ref), std::move(profile)};
}

GraphMeasure canonical_measure_from_resistance(const GraphPtr &g, GraphPoint y) {
  const RefinedFunction r = resistance_profile(g, y);
  const GraphPtr &fine = r.refinement.fine();
  return 0.5 * laplacian(r.function) + GraphMeasure::point_mass(fine, r.refinement.to_fine(y));
}

double tau(const GraphPtr &g, GraphPoint y) {
  const RefinedFunction r = resistance_profile(g, y);
  return 0.5 * integrate(r.function, canonical_measure(r.refinement.fine()));
}

} // namespace metgraph
