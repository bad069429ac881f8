#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

#include "metgraph/calculus.hpp"
#include "metgraph/graph.hpp"
#include "metgraph/laplacian_matrix.hpp"
#include "metgraph/refinement.hpp"

namespace metgraph {

inline constexpr double kDefaultMeshStep = 1.0 / 200.0;
inline constexpr std::size_t kDefaultTerms = 50;

struct Eigenpair {
  double lambda = 0.0;
  /// Values at the fine-model vertices; zero at the anchor.
  Eigen::VectorXd values;
};

/// Eigenpairs of the Laplacian with respect to delta_z, discretized on a fine
/// mesh: Q_h phi = lambda M phi with phi(z) = 0, M the lumped (diagonal) mass.
/// Eigenpairs are ascending in lambda and M-orthonormal; each eigenvector's
/// first entry that is not numerically zero is positive.
class Spectrum {
public:
  Spectrum(Refinement refinement, GraphPoint anchor, double step, Eigen::VectorXd mass, LaplacianMatrix stiffness,
           std::vector<Eigenpair> pairs);

  const Refinement &refinement() const { return refinement_; }
  const GraphPtr &host() const { return refinement_.coarse(); }
  const GraphPtr &mesh() const { return refinement_.fine(); }
  GraphPoint anchor() const { return anchor_; }
  VertexId anchor_vertex() const { return anchor_vertex_; }
  double step() const { return step_; }
  std::size_t size() const { return pairs_.size(); }
  std::span<const Eigenpair> pairs() const { return pairs_; }
  const Eigenpair &pair(std::size_t n) const { return pairs_.at(n); }
  /// Lumped mass: half the total length of mesh segments at each vertex.
  const Eigen::VectorXd &mass() const { return mass_; }
  const Eigen::MatrixXd &stiffness() const { return stiffness_.matrix; }

  /// The n-th eigenfunction (0-based) at a host point, interpolated linearly
  /// inside the mesh segment containing it.
  double eigenfunction(std::size_t n, GraphPoint x) const;

  /// Lumped-mass inner product of two mesh vectors.
  double inner(const Eigen::VectorXd &a, const Eigen::VectorXd &b) const;

private:
  Refinement refinement_;
  GraphPoint anchor_;
  VertexId anchor_vertex_;
  double step_;
  Eigen::VectorXd mass_;
  LaplacianMatrix stiffness_;
  std::vector<Eigenpair> pairs_;
};

/// The k lowest eigenpairs with respect to delta_z on a mesh of step <= h
/// (z is made a mesh vertex). Throws MeshTooCoarse when k exceeds the
/// number of free mesh values, InvalidArgument for h <= 0 or k == 0.
Spectrum compute_spectrum(const GraphPtr &g, GraphPoint z, double h = kDefaultMeshStep,
                          std::size_t k = kDefaultTerms);

struct FourierCoefficients {
  double constant = 0.0;       // f(z)
  std::vector<double> modes;   // <f - f(z), phi_n>
};

FourierCoefficients fourier_coefficients(const Spectrum &spectrum, const PiecewisePolyFunction &f);

/// f(z) + sum_n a_n phi_n(x), truncated to the available coefficients.
double reconstruct(const Spectrum &spectrum, const FourierCoefficients &coefficients, GraphPoint x);

/// sum_{n < terms} phi_n(x) phi_n(y) / lambda_n; all pairs by default.
double j_spectral(const Spectrum &spectrum, GraphPoint x, GraphPoint y);
double j_spectral(const Spectrum &spectrum, GraphPoint x, GraphPoint y, std::size_t terms);

/// ||Q_h phi - lambda M phi||_inf for the n-th pair.
double eigen_residual(const Spectrum &spectrum, std::size_t n);

struct SeriesCheck {
  double partial_sum = 0.0;
  double error = 0.0;
};

/// 8 sum over the first `terms` odd n of sin(pi n x/2) sin(pi n y/2) / (pi n)^2,
/// compared with min(x, y). Requires 0 <= x, y <= 1 and terms >= 1.
SeriesCheck verify_min_identity(double x, double y, std::size_t terms);

} // namespace metgraph
