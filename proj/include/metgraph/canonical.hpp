#pragma once

#include "metgraph/calculus.hpp"
#include "metgraph/graph.hpp"
#include "metgraph/potential.hpp"

namespace metgraph {

/// sum_p (1 - n_p/2) delta_p + sum_e dx / (R_e + L_e), on the given model.
GraphMeasure canonical_measure(const GraphPtr &g);

/// r(e): effective resistance between the endpoints of e in the full graph.
double edge_resistance(const GraphPtr &g, EdgeId e);

/// sum_e r(e) / L_e. Equals #V - 1.
double foster_sum(const GraphPtr &g);

/// sum_e L_e / (R_e + L_e). Equals #E - #V + 1.
double cycle_rank_sum(const GraphPtr &g);

/// x -> r(x, y) on the model refined at y. Each edge carries the quadratic
/// through r at its endpoints and midpoint.
RefinedFunction resistance_profile(const GraphPtr &g, GraphPoint y);

/// 1/2 Delta_x r(x, y) + delta_y, on the model refined at y.
GraphMeasure canonical_measure_from_resistance(const GraphPtr &g, GraphPoint y);

/// tau = 1/2 integral of r(x, y) d mu_can(x), in closed form.
double tau(const GraphPtr &g, GraphPoint y);

} // namespace metgraph
