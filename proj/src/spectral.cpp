#include "metgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "metgraph/error.hpp"
#include "metgraph/format.hpp"

namespace metgraph {

Spectrum::Spectrum(Refinement refinement, GraphPoint anchor, double step, Eigen::VectorXd mass,
                   LaplacianMatrix stiffness, std::vector<Eigenpair> pairs)
    : refinement_(std::move(refinement)), anchor_(anchor), anchor_vertex_(refinement_.fine_vertex(anchor)),
      step_(step), mass_(std::move(mass)), stiffness_(std::move(stiffness)), pairs_(std::move(pairs)) {}

double Spectrum::eigenfunction(std::size_t n, GraphPoint x) const {
  const Eigenpair &p = pairs_.at(n);
  const GraphPoint local = refinement_.to_fine(x);
  const WeightedGraph &fine = *refinement_.fine();
  if (const auto v = fine.vertex_at(local)) return p.values(static_cast<Eigen::Index>(*v));
  const Edge &e = fine.edge(local.edge);
  const double s = local.t / e.length;
  return (1.0 - s) * p.values(static_cast<Eigen::Index>(e.u)) + s * p.values(static_cast<Eigen::Index>(e.v));
}

double Spectrum::inner(const Eigen::VectorXd &a, const Eigen::VectorXd &b) const {
  return (a.array() * b.array() * mass_.array()).sum();
}

Spectrum compute_spectrum(const GraphPtr &g, GraphPoint z, double h, std::size_t k) {
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidArgument, "mesh step must be positive");
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "need at least one eigenpair");

  const GraphPoint anchor = g->canonical(z);
  Refinement ref = refine_mesh(g, h, std::span<const GraphPoint>(&anchor, 1));
  const GraphPtr &mesh = ref.fine();
  const auto n = static_cast<Eigen::Index>(mesh->vertex_count());
  const auto zi = static_cast<Eigen::Index>(ref.fine_vertex(anchor));
  const auto free = static_cast<std::size_t>(n - 1);
  if (k > free)
    throw Error(ErrorKind::MeshTooCoarse,
                "requested " + std::to_string(k) + " eigenpairs but the mesh has " + std::to_string(free) + " free values");

  LaplacianMatrix stiffness = laplacian_matrix(mesh);
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(n);
  for (const Edge &e : mesh->edges()) {
    mass(static_cast<Eigen::Index>(e.u)) += 0.5 * e.length;
    mass(static_cast<Eigen::Index>(e.v)) += 0.5 * e.length;
  }

  // symmetric form M^{-1/2} Q M^{-1/2} on the free vertices
  std::vector<Eigen::Index> keep;
  keep.reserve(free);
  for (Eigen::Index i = 0; i < n; ++i)
    if (i != zi) keep.push_back(i);
  const auto m = static_cast<Eigen::Index>(keep.size());
  Eigen::VectorXd inv_sqrt_mass(m);
  for (Eigen::Index i = 0; i < m; ++i) inv_sqrt_mass(i) = 1.0 / std::sqrt(mass(keep[i]));
  Eigen::MatrixXd a(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      a(i, j) = stiffness.matrix(keep[i], keep[j]) * inv_sqrt_mass(i) * inv_sqrt_mass(j);

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::SingularSystem, "symmetric eigensolver did not converge");

  std::vector<Eigenpair> pairs;
  pairs.reserve(k);
  for (std::size_t p = 0; p < k; ++p) {
    const auto col = static_cast<Eigen::Index>(p);
    const double lambda = solver.eigenvalues()(col);
    if (!(lambda > 0.0))
      throw Error(ErrorKind::SingularSystem, "nonpositive eigenvalue " + format_number(lambda));
    Eigen::VectorXd phi = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i) phi(keep[i]) = solver.eigenvectors()(i, col) * inv_sqrt_mass(i);

    const double cutoff = 1e-12 * phi.lpNorm<Eigen::Infinity>();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(phi(i)) > cutoff) {
        if (phi(i) < 0.0) phi = -phi;
        break;
      }
    }
    pairs.push_back(Eigenpair{lambda, std::move(phi)});
  }
  return Spectrum(std::move(ref), anchor, h, std::move(mass), std::move(stiffness), std::move(pairs));
}

FourierCoefficients fourier_coefficients(const Spectrum &spectrum, const PiecewisePolyFunction &f) {
  if (f.graph() != spectrum.host()) throw Error(ErrorKind::GraphMismatch, "function and spectrum use different models");
  const PiecewisePolyFunction fine = to_fine(spectrum.refinement(), f);
  const WeightedGraph &mesh = *spectrum.mesh();
  FourierCoefficients out;
  out.constant = fine.at_vertex(spectrum.anchor_vertex());
  Eigen::VectorXd centered(static_cast<Eigen::Index>(mesh.vertex_count()));
  for (VertexId v = 0; v < mesh.vertex_count(); ++v)
    centered(static_cast<Eigen::Index>(v)) = fine.at_vertex(v) - out.constant;
  out.modes.reserve(spectrum.size());
  for (const Eigenpair &p : spectrum.pairs()) out.modes.push_back(spectrum.inner(centered, p.values));
  return out;
}

double reconstruct(const Spectrum &spectrum, const FourierCoefficients &coefficients, GraphPoint x) {
  double value = coefficients.constant;
  const std::size_t terms = std::min(coefficients.modes.size(), spectrum.size());
  for (std::size_t n = 0; n < terms; ++n) value += coefficients.modes[n] * spectrum.eigenfunction(n, x);
  return value;
}

double j_spectral(const Spectrum &spectrum, GraphPoint x, GraphPoint y) {
  return j_spectral(spectrum, x, y, spectrum.size());
}

double j_spectral(const Spectrum &spectrum, GraphPoint x, GraphPoint y, std::size_t terms) {
  double sum = 0.0;
  terms = std::min(terms, spectrum.size());
  for (std::size_t n = 0; n < terms; ++n)
    sum += spectrum.eigenfunction(n, x) * spectrum.eigenfunction(n, y) / spectrum.pair(n).lambda;
  return sum;
}

double eigen_residual(const Spectrum &spectrum, std::size_t n) {
  const Eigenpair &p = spectrum.pair(n);
  Eigen::VectorXd r = spectrum.stiffness() * p.values - p.lambda * (spectrum.mass().array() * p.values.array()).matrix();
  // the anchor row carries the constraint force and is not part of the system
  r(static_cast<Eigen::Index>(spectrum.anchor_vertex())) = 0.0;
  return r.lpNorm<Eigen::Infinity>();
}

SeriesCheck verify_min_identity(double x, double y, std::size_t terms) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "x and y must lie in [0, 1]");
  if (terms == 0) throw Error(ErrorKind::InvalidArgument, "need at least one term");
  constexpr double pi = std::numbers::pi;
  double sum = 0.0;
  for (std::size_t k = 0; k < terms; ++k) {
    const double n = static_cast<double>(2 * k + 1);
    sum += std::sin(pi * n * x / 2.0) * std::sin(pi * n * y / 2.0) / (n * n);
  }
  sum *= 8.0 / (pi * pi);
  return SeriesCheck{sum, std::abs(sum - std::min(x, y))};
}

} // namespace metgraph
