#include "metgraph/laplacian_matrix.hpp"

#include <cmath>

#include "metgraph/error.hpp"
#include "metgraph/format.hpp"
#include "metgraph/refinement.hpp"

namespace metgraph {

LaplacianMatrix laplacian_matrix(const GraphPtr &g) {
  const auto n = static_cast<Eigen::Index>(g->vertex_count());
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (const Edge &e : g->edges()) {
    const double w = e.weight();
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    q(u, u) += w;
    q(v, v) += w;
    q(u, v) -= w;
    q(v, u) -= w;
  }
  return LaplacianMatrix{g, std::move(q)};
}

std::vector<VertexMass> discrete_laplacian(const GraphPtr &g, const VertexFunction &f) {
  if (f.graph != g) throw Error(ErrorKind::GraphMismatch, "vertex function lives on another model");
  const Eigen::VectorXd qf = laplacian_matrix(g).matrix * f.values;
  std::vector<VertexMass> out;
  for (VertexId v = 0; v < g->vertex_count(); ++v) {
    const double mass = qf(static_cast<Eigen::Index>(v));
    if (std::abs(mass) >= kZeroMass) out.push_back(VertexMass{v, mass});
  }
  return out;
}

GraphMeasure as_measure(const GraphPtr &g, std::span<const VertexMass> masses) {
  std::vector<Atom> atoms;
  atoms.reserve(masses.size());
  for (const VertexMass &m : masses) atoms.push_back(Atom{g->vertex_point(m.vertex), m.mass});
  return GraphMeasure(g, std::move(atoms));
}

PiecewisePolyFunction interpolate_affine(const GraphPtr &g, const VertexFunction &f) {
  if (f.values.size() != static_cast<Eigen::Index>(g->vertex_count()))
    throw Error(ErrorKind::InvalidArgument, "vertex function has the wrong length");
  std::vector<Polynomial> pieces;
  pieces.reserve(g->edge_count());
  for (const Edge &e : g->edges()) {
    const double a = f[e.u];
    const double b = f[e.v];
    pieces.push_back(Polynomial({a, (b - a) / e.length}));
  }
  return PiecewisePolyFunction(g, std::move(pieces));
}

VertexFunction restrict_to_vertices(const PiecewisePolyFunction &f) {
  const GraphPtr &g = f.graph();
  Eigen::VectorXd values(static_cast<Eigen::Index>(g->vertex_count()));
  for (VertexId v = 0; v < g->vertex_count(); ++v) values(static_cast<Eigen::Index>(v)) = f.at_vertex(v);
  return VertexFunction{g, std::move(values)};
}

VertexFunction solve_grounded(const GraphPtr &g, std::span<const VertexMass> masses, VertexId ground) {
  const auto n = static_cast<Eigen::Index>(g->vertex_count());
  if (ground >= g->vertex_count()) throw Error(ErrorKind::UnknownVertex, "ground index out of range");

  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  double net = 0.0;
  double scale = 0.0;
  for (const VertexMass &m : masses) {
    rhs(static_cast<Eigen::Index>(m.vertex)) += m.mass;
    net += m.mass;
    scale = std::max(scale, std::abs(m.mass));
  }
  if (std::abs(net) >= 1e-9 * std::max(1.0, scale))
    throw Error(ErrorKind::MassNotZero, "point masses sum to " + format_number(net));

  VertexFunction result{g, Eigen::VectorXd::Zero(n)};
  if (n == 1 || scale == 0.0) return result;

  const Eigen::MatrixXd q = laplacian_matrix(g).matrix;
  const auto z = static_cast<Eigen::Index>(ground);
  // keep[i] maps reduced index i to the full index
  std::vector<Eigen::Index> keep;
  keep.reserve(static_cast<std::size_t>(n - 1));
  for (Eigen::Index i = 0; i < n; ++i)
    if (i != z) keep.push_back(i);
  const auto m = static_cast<Eigen::Index>(keep.size());
  Eigen::MatrixXd reduced(m, m);
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    b(i) = rhs(keep[i]);
    for (Eigen::Index j = 0; j < m; ++j) reduced(i, j) = q(keep[i], keep[j]);
  }

  const Eigen::LLT<Eigen::MatrixXd> factor(reduced);
  if (factor.info() != Eigen::Success)
    throw Error(ErrorKind::SingularSystem, "grounded Laplacian is not positive definite");
  const Eigen::VectorXd x = factor.solve(b);
  for (Eigen::Index i = 0; i < m; ++i) result.values(keep[i]) = x(i);

  const double residual = (q * result.values - rhs).lpNorm<Eigen::Infinity>();
  if (!(residual < kSolveResidual * std::max(1.0, scale)))
    throw Error(ErrorKind::ResidualTooLarge, "grounded solve residual " + format_number(residual));
  return result;
}

PiecewisePolyFunction affine_approximation(const PiecewisePolyFunction &f, int parts) {
  const Refinement ref = refine_uniform(f.graph(), parts);
  const PiecewisePolyFunction fine = to_fine(ref, f);
  return interpolate_affine(ref.fine(), restrict_to_vertices(fine));
}

} // namespace metgraph
