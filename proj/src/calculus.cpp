#include "metgraph/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "metgraph/error.hpp"
#include "metgraph/format.hpp"

namespace metgraph {

namespace {

void require_same_graph(const GraphPtr &a, const GraphPtr &b) {
  if (a != b) throw Error(ErrorKind::GraphMismatch, "operands live on different graph models");
}

/// Local coordinate of p on edge e, where p is a vertex incident to e or a
/// point of e.
double local_offset(const WeightedGraph &g, GraphPoint p, EdgeId e) {
  if (const auto v = g.vertex_at(p)) {
    const Edge &edge = g.edge(e);
    if (edge.u == *v) return 0.0;
    if (edge.v == *v) return edge.length;
    throw Error(ErrorKind::InvalidDirection, "edge '" + edge.name + "' does not meet " + g.describe(p));
  }
  if (p.edge != e) throw Error(ErrorKind::InvalidDirection, "edge '" + g.edge(e).name + "' does not contain " + g.describe(p));
  return p.t;
}

} // namespace

// ---------------------------------------------------------------------------
// PiecewisePolyFunction

PiecewisePolyFunction::PiecewisePolyFunction(GraphPtr graph, std::vector<Polynomial> pieces)
    : graph_(std::move(graph)), pieces_(std::move(pieces)) {
  const WeightedGraph &g = *graph_;
  if (pieces_.size() != g.edge_count())
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(g.edge_count()) + " edge polynomials, got " +
                                                std::to_string(pieces_.size()));
  for (EdgeId e = 0; e < pieces_.size(); ++e) {
    if (pieces_[e].degree() > kMaxFunctionDegree)
      throw Error(ErrorKind::DegreeTooHigh, "edge '" + g.edge(e).name + "' carries degree " +
                                                std::to_string(pieces_[e].degree()));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto incident = g.incidences(v);
    double reference = 0.0;
    for (std::size_t k = 0; k < incident.size(); ++k) {
      const Edge &edge = g.edge(incident[k].edge);
      const double value = pieces_[incident[k].edge](incident[k].at_start ? 0.0 : edge.length);
      if (k == 0) {
        reference = value;
      } else if (std::abs(value - reference) > kContinuityTolerance) {
        throw Error(ErrorKind::Discontinuous, "values " + format_number(reference) + " and " + format_number(value) +
                                                  " meet at vertex '" + g.vertex_name(v) + "'");
      }
    }
  }
}

PiecewisePolyFunction PiecewisePolyFunction::constant(GraphPtr graph, double value) {
  std::vector<Polynomial> pieces(graph->edge_count(), Polynomial::constant(value));
  return PiecewisePolyFunction(std::move(graph), std::move(pieces));
}

double PiecewisePolyFunction::operator()(GraphPoint p) const {
  const GraphPoint q = graph_->canonical(p);
  return pieces_[q.edge](q.t);
}

double PiecewisePolyFunction::at_vertex(VertexId v) const { return (*this)(graph_->vertex_point(v)); }

int PiecewisePolyFunction::max_degree() const {
  int d = 0;
  for (const Polynomial &p : pieces_) d = std::max(d, p.degree());
  return d;
}

PiecewisePolyFunction operator+(const PiecewisePolyFunction &a, const PiecewisePolyFunction &b) {
  require_same_graph(a.graph_, b.graph_);
  std::vector<Polynomial> pieces(a.pieces_.size());
  for (std::size_t e = 0; e < pieces.size(); ++e) pieces[e] = a.pieces_[e] + b.pieces_[e];
  return PiecewisePolyFunction(a.graph_, std::move(pieces));
}

PiecewisePolyFunction operator-(const PiecewisePolyFunction &a, const PiecewisePolyFunction &b) {
  return a + (-1.0) * b;
}

PiecewisePolyFunction operator*(double s, const PiecewisePolyFunction &f) {
  std::vector<Polynomial> pieces(f.pieces_.size());
  for (std::size_t e = 0; e < pieces.size(); ++e) pieces[e] = s * f.pieces_[e];
  return PiecewisePolyFunction(f.graph_, std::move(pieces));
}

// ---------------------------------------------------------------------------
// GraphMeasure

GraphMeasure::GraphMeasure(GraphPtr graph) : graph_(std::move(graph)), densities_(graph_->edge_count()) {}

GraphMeasure::GraphMeasure(GraphPtr graph, std::vector<Atom> atoms, std::vector<Polynomial> densities)
    : graph_(std::move(graph)), atoms_(std::move(atoms)), densities_(std::move(densities)) {
  if (densities_.empty()) densities_.resize(graph_->edge_count());
  if (densities_.size() != graph_->edge_count())
    throw Error(ErrorKind::InvalidArgument, "expected one density per edge");
  normalize();
}

GraphMeasure GraphMeasure::point_mass(GraphPtr graph, GraphPoint p, double mass) {
  return GraphMeasure(std::move(graph), {Atom{p, mass}});
}

GraphMeasure GraphMeasure::arclength(GraphPtr graph) {
  std::vector<Polynomial> densities(graph->edge_count(), Polynomial::constant(1.0));
  return GraphMeasure(std::move(graph), {}, std::move(densities));
}

void GraphMeasure::normalize() {
  const WeightedGraph &g = *graph_;
  for (Atom &a : atoms_) a.point = g.canonical(a.point);
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom &a, const Atom &b) { return a.point < b.point; });
  std::vector<Atom> merged;
  for (const Atom &a : atoms_) {
    if (!merged.empty() && g.same_point(merged.back().point, a.point)) {
      merged.back().mass += a.mass;
    } else {
      merged.push_back(a);
    }
  }
  std::erase_if(merged, [](const Atom &a) { return std::abs(a.mass) < kZeroMass; });
  atoms_ = std::move(merged);
}

bool GraphMeasure::is_discrete() const {
  return std::all_of(densities_.begin(), densities_.end(), [](const Polynomial &p) { return p.is_zero(); });
}

double GraphMeasure::atom_mass(GraphPoint p) const {
  for (const Atom &a : atoms_)
    if (graph_->same_point(a.point, p)) return a.mass;
  return 0.0;
}

GraphMeasure operator+(const GraphMeasure &a, const GraphMeasure &b) {
  require_same_graph(a.graph_, b.graph_);
  std::vector<Atom> atoms = a.atoms_;
  atoms.insert(atoms.end(), b.atoms_.begin(), b.atoms_.end());
  std::vector<Polynomial> densities(a.densities_.size());
  for (std::size_t e = 0; e < densities.size(); ++e) densities[e] = a.densities_[e] + b.densities_[e];
  return GraphMeasure(a.graph_, std::move(atoms), std::move(densities));
}

GraphMeasure operator-(const GraphMeasure &a, const GraphMeasure &b) { return a + (-1.0) * b; }

GraphMeasure operator*(double s, const GraphMeasure &m) {
  std::vector<Atom> atoms = m.atoms_;
  for (Atom &a : atoms) a.mass *= s;
  std::vector<Polynomial> densities(m.densities_.size());
  for (std::size_t e = 0; e < densities.size(); ++e) densities[e] = s * m.densities_[e];
  return GraphMeasure(m.graph_, std::move(atoms), std::move(densities));
}

// ---------------------------------------------------------------------------
// Operations

std::vector<Direction> directions_at(const WeightedGraph &g, GraphPoint p) {
  const GraphPoint q = g.canonical(p);
  std::vector<Direction> out;
  if (const auto v = g.vertex_at(q)) {
    for (const Incidence &inc : g.incidences(*v)) out.push_back(Direction{inc.edge, inc.at_start});
  } else {
    out.push_back(Direction{q.edge, true});
    out.push_back(Direction{q.edge, false});
  }
  return out;
}

double evaluate(const PiecewisePolyFunction &f, GraphPoint p) { return f(p); }

double directional_derivative(const PiecewisePolyFunction &f, GraphPoint p, Direction direction) {
  const WeightedGraph &g = *f.graph();
  const GraphPoint q = g.canonical(p);
  const double t = local_offset(g, q, direction.edge);
  const double length = g.edge(direction.edge).length;
  if (g.vertex_at(q) && ((direction.forward && t != 0.0) || (!direction.forward && t != length)))
    throw Error(ErrorKind::InvalidDirection, "direction along '" + g.edge(direction.edge).name + "' points out of the edge at " +
                                                 g.describe(q));
  const double slope = f.on_edge(direction.edge).derivative()(t);
  return direction.forward ? slope : -slope;
}

double derivative_sum(const PiecewisePolyFunction &f, GraphPoint p) {
  double sigma = 0.0;
  for (const Direction &d : directions_at(*f.graph(), p)) sigma += directional_derivative(f, p, d);
  return sigma;
}

GraphMeasure laplacian(const PiecewisePolyFunction &f) {
  const WeightedGraph &g = *f.graph();
  std::vector<Polynomial> densities(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) densities[e] = -f.on_edge(e).derivative().derivative();
  std::vector<Atom> atoms;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const GraphPoint p = g.vertex_point(v);
    atoms.push_back(Atom{p, -derivative_sum(f, p)});
  }
  return GraphMeasure(f.graph(), std::move(atoms), std::move(densities));
}

double total_mass(const GraphMeasure &mu) {
  double mass = 0.0;
  for (const Atom &a : mu.atoms()) mass += a.mass;
  const WeightedGraph &g = *mu.graph();
  for (EdgeId e = 0; e < g.edge_count(); ++e) mass += mu.density(e).integral(0.0, g.edge(e).length);
  return mass;
}

double integrate(const PiecewisePolyFunction &f, const GraphMeasure &mu) {
  require_same_graph(f.graph(), mu.graph());
  double sum = 0.0;
  for (const Atom &a : mu.atoms()) sum += a.mass * f(a.point);
  const WeightedGraph &g = *mu.graph();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (mu.density(e).is_zero()) continue;
    sum += (f.on_edge(e) * mu.density(e)).integral(0.0, g.edge(e).length);
  }
  return sum;
}

double dirichlet_inner(const PiecewisePolyFunction &f, const PiecewisePolyFunction &g) {
  require_same_graph(f.graph(), g.graph());
  const WeightedGraph &graph = *f.graph();
  double sum = 0.0;
  for (EdgeId e = 0; e < graph.edge_count(); ++e)
    sum += (f.on_edge(e).derivative() * g.on_edge(e).derivative()).integral(0.0, graph.edge(e).length);
  return sum;
}

VertexExtremum maximum_vertex(const PiecewisePolyFunction &f) {
  if (!f.is_affine()) throw Error(ErrorKind::DegreeTooHigh, "maximum principle needs a piecewise affine function");
  const WeightedGraph &g = *f.graph();
  double top = -std::numeric_limits<double>::infinity();
  double bottom = std::numeric_limits<double>::infinity();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    top = std::max(top, f.at_vertex(v));
    bottom = std::min(bottom, f.at_vertex(v));
  }
  const double scale = std::max(1.0, std::max(std::abs(top), std::abs(bottom)));
  if (top - bottom <= kZeroMass * scale) throw Error(ErrorKind::ConstantFunction, "function is constant");

  // among the maximizers, report the one with the most negative sigma
  std::optional<VertexExtremum> best;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const double value = f.at_vertex(v);
    if (top - value > kContinuityTolerance * scale) continue;
    const double sigma = derivative_sum(f, g.vertex_point(v));
    if (!best || sigma < best->sigma) best = VertexExtremum{v, value, sigma};
  }
  return *best;
}

double measure_distance(const GraphMeasure &a, const GraphMeasure &b) {
  require_same_graph(a.graph(), b.graph());
  double worst = 0.0;
  for (const Atom &x : a.atoms()) worst = std::max(worst, std::abs(x.mass - b.atom_mass(x.point)));
  for (const Atom &x : b.atoms()) worst = std::max(worst, std::abs(x.mass - a.atom_mass(x.point)));
  for (EdgeId e = 0; e < a.graph()->edge_count(); ++e)
    worst = std::max(worst, max_coefficient_difference(a.density(e), b.density(e)));
  return worst;
}

bool approx_equal(const GraphMeasure &a, const GraphMeasure &b, double tolerance) {
  return measure_distance(a, b) <= tolerance;
}

PiecewisePolyFunction to_fine(const Refinement &refinement, const PiecewisePolyFunction &f) {
  require_same_graph(refinement.coarse(), f.graph());
  const WeightedGraph &fine = *refinement.fine();
  std::vector<Polynomial> pieces(fine.edge_count());
  for (EdgeId e = 0; e < fine.edge_count(); ++e) {
    const EdgeOrigin &o = refinement.origin(e);
    pieces[e] = f.on_edge(o.parent).shifted(o.offset);
  }
  return PiecewisePolyFunction(refinement.fine(), std::move(pieces));
}

GraphMeasure to_fine(const Refinement &refinement, const GraphMeasure &mu) {
  require_same_graph(refinement.coarse(), mu.graph());
  const WeightedGraph &fine = *refinement.fine();
  std::vector<Atom> atoms;
  for (const Atom &a : mu.atoms()) atoms.push_back(Atom{refinement.to_fine(a.point), a.mass});
  std::vector<Polynomial> densities(fine.edge_count());
  for (EdgeId e = 0; e < fine.edge_count(); ++e) {
    const EdgeOrigin &o = refinement.origin(e);
    densities[e] = mu.density(o.parent).shifted(o.offset);
  }
  return GraphMeasure(refinement.fine(), std::move(atoms), std::move(densities));
}

} // namespace metgraph
