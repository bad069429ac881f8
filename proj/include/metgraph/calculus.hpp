#pragma once

#include <span>
#include <vector>

#include "metgraph/graph.hpp"
#include "metgraph/polynomial.hpp"
#include "metgraph/refinement.hpp"

namespace metgraph {

inline constexpr int kMaxFunctionDegree = 4;
inline constexpr double kContinuityTolerance = 1e-9;
/// Atoms lighter than this are dropped when a measure is normalized.
inline constexpr double kZeroMass = 1e-12;
inline constexpr double kMeasureTolerance = 1e-9;

/// A continuous function given by one polynomial per edge, in the edge's
/// arclength coordinate. Construction rejects mismatched vertex values.
class PiecewisePolyFunction {
public:
  PiecewisePolyFunction(GraphPtr graph, std::vector<Polynomial> pieces);

  static PiecewisePolyFunction constant(GraphPtr graph, double value);

  const GraphPtr &graph() const { return graph_; }
  const Polynomial &on_edge(EdgeId e) const { return pieces_.at(e); }
  std::span<const Polynomial> pieces() const { return pieces_; }

  double operator()(GraphPoint p) const;
  double at_vertex(VertexId v) const;
  int max_degree() const;
  bool is_affine() const { return max_degree() <= 1; }

  friend PiecewisePolyFunction operator+(const PiecewisePolyFunction &a, const PiecewisePolyFunction &b);
  friend PiecewisePolyFunction operator-(const PiecewisePolyFunction &a, const PiecewisePolyFunction &b);
  friend PiecewisePolyFunction operator*(double s, const PiecewisePolyFunction &f);

private:
  GraphPtr graph_;
  std::vector<Polynomial> pieces_;
};

struct Atom {
  GraphPoint point;
  double mass = 0.0;
};

/// Finitely many point masses plus a polynomial density on each edge.
/// Atoms are kept at canonical points, sorted, one per point, with
/// near-zero masses removed.
class GraphMeasure {
public:
  explicit GraphMeasure(GraphPtr graph);
  GraphMeasure(GraphPtr graph, std::vector<Atom> atoms, std::vector<Polynomial> densities = {});

  static GraphMeasure point_mass(GraphPtr graph, GraphPoint p, double mass = 1.0);
  /// dx: density 1 on every edge.
  static GraphMeasure arclength(GraphPtr graph);

  const GraphPtr &graph() const { return graph_; }
  std::span<const Atom> atoms() const { return atoms_; }
  const Polynomial &density(EdgeId e) const { return densities_.at(e); }
  bool is_discrete() const;
  /// Mass of the atom at p, 0 if there is none.
  double atom_mass(GraphPoint p) const;

  friend GraphMeasure operator+(const GraphMeasure &a, const GraphMeasure &b);
  friend GraphMeasure operator-(const GraphMeasure &a, const GraphMeasure &b);
  friend GraphMeasure operator*(double s, const GraphMeasure &m);

private:
  void normalize();

  GraphPtr graph_;
  std::vector<Atom> atoms_;
  std::vector<Polynomial> densities_;
};

/// A direction leaving a point along an edge; `forward` means toward
/// increasing arclength.
struct Direction {
  EdgeId edge = 0;
  bool forward = true;

  friend bool operator==(const Direction &, const Direction &) = default;
};

/// All directions leaving p: one per incident edge at a vertex, two at an
/// interior point.
std::vector<Direction> directions_at(const WeightedGraph &g, GraphPoint p);

double evaluate(const PiecewisePolyFunction &f, GraphPoint p);

/// One-sided derivative of f at p in the given direction: f'_e(t) going
/// forward, -f'_e(t) going backward. Throws InvalidDirection.
double directional_derivative(const PiecewisePolyFunction &f, GraphPoint p, Direction direction);

/// sigma_p(f): the sum of directional derivatives over all directions at p.
double derivative_sum(const PiecewisePolyFunction &f, GraphPoint p);

/// The measure -f'' dx - sum_p sigma_p(f) delta_p.
GraphMeasure laplacian(const PiecewisePolyFunction &f);

double total_mass(const GraphMeasure &mu);

/// Exact integral of f against mu.
double integrate(const PiecewisePolyFunction &f, const GraphMeasure &mu);

/// sum_e integral of f'_e g'_e.
double dirichlet_inner(const PiecewisePolyFunction &f, const PiecewisePolyFunction &g);

struct VertexExtremum {
  VertexId vertex = 0;
  double value = 0.0;
  double sigma = 0.0;
};

/// For nonconstant piecewise-affine f: a vertex where f is maximal and
/// sigma_p(f) < 0. Throws ConstantFunction, DegreeTooHigh.
VertexExtremum maximum_vertex(const PiecewisePolyFunction &f);

/// Largest atom-mass or density-coefficient discrepancy between two measures
/// on the same graph.
double measure_distance(const GraphMeasure &a, const GraphMeasure &b);
bool approx_equal(const GraphMeasure &a, const GraphMeasure &b, double tolerance = kMeasureTolerance);

/// The same function or measure expressed on the fine model.
PiecewisePolyFunction to_fine(const Refinement &refinement, const PiecewisePolyFunction &f);
GraphMeasure to_fine(const Refinement &refinement, const GraphMeasure &mu);

} // namespace metgraph
