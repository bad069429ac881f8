#pragma once

#include "metgraph/calculus.hpp"
#include "metgraph/graph.hpp"
#include "metgraph/refinement.hpp"

namespace metgraph {

/// A function living on a refinement of the caller's model, queried in the
/// caller's coordinates.
struct RefinedFunction {
  Refinement refinement;
  PiecewisePolyFunction function;

  double at(GraphPoint coarse_point) const { return function(refinement.to_fine(coarse_point)); }
};

/// j_z(., y): the piecewise affine function with Laplacian delta_y - delta_z
/// vanishing at z.
RefinedFunction j_function(const GraphPtr &g, GraphPoint y, GraphPoint z);

/// j_z(x, y) as a number.
double j_value(const GraphPtr &g, GraphPoint z, GraphPoint x, GraphPoint y);

/// r(x, y) = j_y(x, x).
double effective_resistance(const GraphPtr &g, GraphPoint x, GraphPoint y);

/// Potential of a current I entering at `source` and leaving at `sink`, with
/// the potential at `ground` fixed to zero. Everything lives on the model
/// refined at the three points.
struct PotentialSolution {
  Refinement refinement;
  PiecewisePolyFunction potential;
  GraphPoint source;
  GraphPoint sink;
  GraphPoint ground;
  double current = 0.0;
};

/// Throws SourceEqualsSink, InvalidArgument (I <= 0).
PotentialSolution solve_current(const GraphPtr &g, GraphPoint source, GraphPoint sink, double current,
                                GraphPoint ground);

/// -phi'_e on an edge of the refined model, in the edge's orientation.
double current_on_edge(const PotentialSolution &solution, EdgeId fine_edge);

/// Largest violation of the defining conditions: the Laplacian of the
/// potential against I(delta_source - delta_sink), and its value at ground.
double solution_defect(const PotentialSolution &solution);

/// The piecewise affine f with Laplacian nu (a discrete measure of total
/// mass 0) and f(z) = 0. Throws MassNotZero, UnsupportedMeasure.
RefinedFunction solve_measure_poisson(const GraphMeasure &nu, GraphPoint z);

} // namespace metgraph
