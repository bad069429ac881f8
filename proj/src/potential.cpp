#include "metgraph/potential.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "metgraph/error.hpp"
#include "metgraph/laplacian_matrix.hpp"

namespace metgraph {

namespace {

RefinedFunction solve_on(Refinement refinement, const std::vector<VertexMass> &masses, VertexId ground) {
  const GraphPtr fine = refinement.fine();
  const VertexFunction values = solve_grounded(fine, masses, ground);
  return RefinedFunction{std::move(refinement), interpolate_affine(fine, values)};
}

} // namespace

RefinedFunction j_function(const GraphPtr &g, GraphPoint y, GraphPoint z) {
  const std::vector<GraphPoint> points{y, z};
  Refinement ref = refine_at(g, points);
  const VertexId fy = ref.fine_vertex(y);
  const VertexId fz = ref.fine_vertex(z);
  std::vector<VertexMass> masses;
  if (fy != fz) masses = {VertexMass{fy, 1.0}, VertexMass{fz, -1.0}};
  return solve_on(std::move(ref), masses, fz);
}

double j_value(const GraphPtr &g, GraphPoint z, GraphPoint x, GraphPoint y) {
  const std::vector<GraphPoint> points{x, y, z};
  const Refinement ref = refine_at(g, points);
  const VertexId fx = ref.fine_vertex(x);
  const VertexId fy = ref.fine_vertex(y);
  const VertexId fz = ref.fine_vertex(z);
  if (fy == fz || fx == fz) return 0.0;
  const std::vector<VertexMass> masses{VertexMass{fy, 1.0}, VertexMass{fz, -1.0}};
  return solve_grounded(ref.fine(), masses, fz)[fx];
}

double effective_resistance(const GraphPtr &g, GraphPoint x, GraphPoint y) {
  if (g->same_point(x, y)) return 0.0;
  return j_value(g, y, x, x);
}

PotentialSolution solve_current(const GraphPtr &g, GraphPoint source, GraphPoint sink, double current,
                                GraphPoint ground) {
  if (g->same_point(source, sink)) throw Error(ErrorKind::SourceEqualsSink, "source and sink coincide at " + g->describe(source));
  if (!(current > 0.0)) throw Error(ErrorKind::InvalidArgument, "injected current must be positive");
  const std::vector<GraphPoint> points{source, sink, ground};
  Refinement ref = refine_at(g, points);
  const std::vector<VertexMass> masses{VertexMass{ref.fine_vertex(source), current},
                                       VertexMass{ref.fine_vertex(sink), -current}};
  const VertexId fg = ref.fine_vertex(ground);
  RefinedFunction phi = solve_on(std::move(ref), masses, fg);
  return PotentialSolution{std::move(phi.refinement), std::move(phi.function), g->canonical(source),
                           g->canonical(sink), g->canonical(ground), current};
}

double current_on_edge(const PotentialSolution &solution, EdgeId fine_edge) {
  return -solution.potential.on_edge(fine_edge).coefficient(1);
}

double solution_defect(const PotentialSolution &solution) {
  const Refinement &ref = solution.refinement;
  const GraphPtr &fine = ref.fine();
  const GraphMeasure expected(fine, {Atom{ref.to_fine(solution.source), solution.current},
                                     Atom{ref.to_fine(solution.sink), -solution.current}});
  const double measure_gap = measure_distance(laplacian(solution.potential), expected);
  return std::max(measure_gap, std::abs(solution.potential(ref.to_fine(solution.ground))));
}

RefinedFunction solve_measure_poisson(const GraphMeasure &nu, GraphPoint z) {
  if (!nu.is_discrete()) throw Error(ErrorKind::UnsupportedMeasure, "only discrete measures are supported");
  const GraphPtr &g = nu.graph();
  std::vector<GraphPoint> points{z};
  for (const Atom &a : nu.atoms()) points.push_back(a.point);
  Refinement ref = refine_at(g, points);
  std::vector<VertexMass> masses;
  for (const Atom &a : nu.atoms()) masses.push_back(VertexMass{ref.fine_vertex(a.point), a.mass});
  const VertexId ground = ref.fine_vertex(z);
  return solve_on(std::move(ref), masses, ground);
}

} // namespace metgraph
