#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

#include "metgraph/calculus.hpp"
#include "metgraph/graph.hpp"

namespace metgraph {

/// Post-solve residual bound for grounded solves, relative to max(1, |rhs|).
inline constexpr double kSolveResidual = 1e-9;

/// The Kirchhoff matrix: Q_ij = -1/L_ij for adjacent i != j, Q_ii = sum of
/// incident weights. Symmetric, PSD, zero row sums.
struct LaplacianMatrix {
  GraphPtr graph;
  Eigen::MatrixXd matrix;
};

/// One value per vertex, in vertex order.
struct VertexFunction {
  GraphPtr graph;
  Eigen::VectorXd values;

  double operator[](VertexId v) const { return values(static_cast<Eigen::Index>(v)); }
};

struct VertexMass {
  VertexId vertex = 0;
  double mass = 0.0;
};

LaplacianMatrix laplacian_matrix(const GraphPtr &g);

/// The atoms [Q f]_i at v_i, near-zero masses dropped.
std::vector<VertexMass> discrete_laplacian(const GraphPtr &g, const VertexFunction &f);

/// Vertex masses as a discrete measure.
GraphMeasure as_measure(const GraphPtr &g, std::span<const VertexMass> masses);

/// Linear interpolation of vertex values along every edge.
PiecewisePolyFunction interpolate_affine(const GraphPtr &g, const VertexFunction &f);

/// Values of f at the vertices.
VertexFunction restrict_to_vertices(const PiecewisePolyFunction &f);

/// Solves Q f = c with f(ground) = 0, by deleting the ground row and column
/// and factoring the SPD remainder. Throws MassNotZero, SingularSystem,
/// ResidualTooLarge.
VertexFunction solve_grounded(const GraphPtr &g, std::span<const VertexMass> masses, VertexId ground);

/// Restriction of f to the model with every edge cut into `parts` equal
/// pieces, interpolated linearly.
PiecewisePolyFunction affine_approximation(const PiecewisePolyFunction &f, int parts);

} // namespace metgraph
