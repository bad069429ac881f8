#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "metgraph/error.hpp"
#include "metgraph/potential.hpp"
#include "metgraph/spectral.hpp"
#include "support/fixtures.hpp"

using namespace metgraph;
using namespace metgraph::testing;

namespace {

constexpr double pi = std::numbers::pi;

double exact_interval_lambda(int n) { return pi * pi * n * n / 4.0; }

// pair i on [0,1] with z = 0 belongs to the odd index n = 2i + 1
int odd_index(std::size_t i) { return static_cast<int>(2 * i + 1); }

// sign relating the computed pair to sqrt(2) sin(pi n x / 2)
double interval_sign(const Spectrum &s, std::size_t i) {
  return s.eigenfunction(i, GraphPoint{0, 1.0}) * std::sin(pi * odd_index(i) / 2.0) > 0 ? 1.0 : -1.0;
}

GraphPtr three_star() {
  return build_graph({"O", "A", "B", "C"}, {{"OA", "O", "A", 1.0}, {"OB", "O", "B", 0.5}, {"OC", "O", "C", 0.75}});
}

} // namespace

TEST_CASE("interval eigenvalues and eigenfunctions") {
  const GraphPtr s = segment();
  const Spectrum spec = compute_spectrum(s, s->vertex_point(0), 1.0 / 200, 10);
  REQUIRE(spec.size() == 10);
  for (std::size_t i = 0; i < 3; ++i) {
    const double exact = exact_interval_lambda(odd_index(i));
    CHECK(std::abs(spec.pair(i).lambda - exact) / exact < 1e-3);
  }
  for (std::size_t i = 0; i < spec.size(); ++i) {
    CHECK(spec.pair(i).lambda > 0.0);
    if (i > 0) CHECK(spec.pair(i).lambda > spec.pair(i - 1).lambda);
    CHECK(spec.pair(i).values(static_cast<Eigen::Index>(spec.anchor_vertex())) == 0.0);
  }
  double sup = 0.0;
  const double sign = interval_sign(spec, 0);
  for (int k = 0; k <= 100; ++k) {
    const double x = k / 100.0;
    sup = std::max(sup, std::abs(spec.eigenfunction(0, GraphPoint{0, x}) - sign * std::sqrt(2.0) * std::sin(pi * x / 2)));
  }
  CHECK(sup < 5e-3);
  CHECK(sign == 1.0);
}

TEST_CASE("eigenvectors are M-orthonormal with small residuals") {
  for (const NamedGraph &ng : {NamedGraph{"segment", segment()}, NamedGraph{"star", star()},
                               NamedGraph{"circle_with_tail", circle_with_tail()}}) {
    CAPTURE(ng.name);
    const Spectrum spec = compute_spectrum(ng.graph, ng.graph->vertex_point(0), 1.0 / 100, 12);
    for (std::size_t i = 0; i < spec.size(); ++i) {
      CHECK(eigen_residual(spec, i) < 1e-8);
      for (std::size_t j = 0; j < spec.size(); ++j) {
        const double ip = spec.inner(spec.pair(i).values, spec.pair(j).values);
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-6);
      }
      // first clearly nonzero entry is positive
      const Eigen::VectorXd &v = spec.pair(i).values;
      const double top = v.cwiseAbs().maxCoeff();
      for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (std::abs(v(k)) > 1e-12 * top) {
          CHECK(v(k) > 0.0);
          break;
        }
      }
    }
  }
}

TEST_CASE("the eigen equation holds weakly") {
  std::mt19937_64 rng(151);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  const GraphPtr g = circle_with_tail();
  const Spectrum spec = compute_spectrum(g, GraphPoint{3, 0.2}, 1.0 / 100, 8);
  const Eigen::Index n = static_cast<Eigen::Index>(spec.mesh()->vertex_count());
  const auto z = static_cast<Eigen::Index>(spec.anchor_vertex());
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd psi(n);
    for (Eigen::Index k = 0; k < n; ++k) psi(k) = value(rng);
    psi(z) = 0.0;
    for (const Eigenpair &p : spec.pairs()) {
      const double lhs = psi.dot(spec.stiffness() * p.values);
      const double rhs = p.lambda * psi.dot(spec.mass().cwiseProduct(p.values));
      CHECK(std::abs(lhs - rhs) < 1e-8);
    }
  }
}

TEST_CASE("eigenvalues converge at second order") {
  const GraphPtr s = segment();
  for (std::size_t i = 0; i < 3; ++i) {
    const double exact = exact_interval_lambda(odd_index(i));
    const double e1 = std::abs(compute_spectrum(s, s->vertex_point(0), 1.0 / 50, 3).pair(i).lambda - exact);
    const double e2 = std::abs(compute_spectrum(s, s->vertex_point(0), 1.0 / 100, 3).pair(i).lambda - exact);
    CHECK(e1 / e2 > 2.8);
    CHECK(e1 / e2 < 5.2);
  }

  const GraphPtr g = three_star();
  std::vector<Spectrum> levels;
  for (double h : {1.0 / 20, 1.0 / 40, 1.0 / 80}) levels.push_back(compute_spectrum(g, g->vertex_point(1), h, 3));
  for (std::size_t i = 0; i < 3; ++i) {
    const double d1 = levels[0].pair(i).lambda - levels[1].pair(i).lambda;
    const double d2 = levels[1].pair(i).lambda - levels[2].pair(i).lambda;
    CHECK(d1 / d2 > 2.8);
    CHECK(d1 / d2 < 5.2);
  }
}

TEST_CASE("Fourier coefficients of min(x, y)") {
  const double y = 0.7;
  const GraphPtr g = build_graph({"A", "Y", "B"}, {{"AY", "A", "Y", y}, {"YB", "Y", "B", 1 - y}});
  const PiecewisePolyFunction f(g, {Polynomial({0.0, 1.0}), Polynomial::constant(y)});
  const Spectrum spec = compute_spectrum(g, g->vertex_point(0), 1.0 / 200, 99);
  const FourierCoefficients a = fourier_coefficients(spec, f);
  CHECK(a.constant == 0.0);
  REQUIRE(a.modes.size() == 99);
  for (std::size_t i = 0; i < 5; ++i) {
    const int n = odd_index(i);
    // the sign of phi_n relative to sqrt(2) sin(pi n x / 2)
    const double sign = spec.eigenfunction(i, GraphPoint{1, 1 - y}) * std::sin(pi * n / 2.0) > 0 ? 1.0 : -1.0;
    const double expected = 4 * std::sqrt(2.0) / (pi * pi * n * n) * std::sin(pi * n * y / 2);
    CAPTURE(n);
    CHECK(std::abs(sign * a.modes[i] - expected) / std::abs(expected) < 1e-2);
  }

  CHECK(std::abs(reconstruct(spec, a, GraphPoint{0, 0.3}) - 0.3) < 5e-3);
  CHECK(reconstruct(spec, a, g->vertex_point(0)) == a.constant);

  // truncation error falls as more modes are kept
  double previous = 1e300;
  for (std::size_t k : {9, 33, 99}) {
    FourierCoefficients cut = a;
    cut.modes.resize(k);
    double sup = 0.0;
    for (int j = 0; j <= 50; ++j) {
      const double x = j / 50.0;
      const GraphPoint p = x <= y ? GraphPoint{0, x} : GraphPoint{1, x - y};
      sup = std::max(sup, std::abs(reconstruct(spec, cut, p) - std::min(x, y)));
    }
    CHECK(sup < previous);
    previous = sup;
  }

  // Parseval
  Eigen::VectorXd values(static_cast<Eigen::Index>(spec.mesh()->vertex_count()));
  const PiecewisePolyFunction fine = to_fine(spec.refinement(), f);
  for (VertexId v = 0; v < spec.mesh()->vertex_count(); ++v) values(static_cast<Eigen::Index>(v)) = fine.at_vertex(v);
  const double norm = spec.inner(values, values);
  double partial = 0.0;
  for (double c : a.modes) partial += c * c;
  CHECK(partial <= norm + 1e-12);
  CHECK(partial > 0.999 * norm);
}

TEST_CASE("Fourier coefficients of x and of constants") {
  const GraphPtr s = segment();
  const Spectrum spec = compute_spectrum(s, s->vertex_point(0), 1.0 / 200, 5);
  const FourierCoefficients a = fourier_coefficients(spec, PiecewisePolyFunction(s, {Polynomial({0.0, 1.0})}));
  for (std::size_t i = 0; i < 5; ++i) {
    const int n = odd_index(i);
    const double expected = 4 * std::sqrt(2.0) / (pi * pi * n * n) * std::sin(pi * n / 2);
    CHECK(std::abs(interval_sign(spec, i) * a.modes[i] - expected) / std::abs(expected) < 1e-2);
  }
  const FourierCoefficients c = fourier_coefficients(spec, PiecewisePolyFunction::constant(s, 2.5));
  CHECK(c.constant == 2.5);
  for (double m : c.modes) CHECK(m == 0.0);
}

TEST_CASE("spectral j on the interval corner") {
  const GraphPtr s = segment();
  const Spectrum spec = compute_spectrum(s, s->vertex_point(0), 1.0 / 1000, 999);
  const GraphPoint one{0, 1.0};
  CHECK(std::abs(j_spectral(spec, one, one) - 1.0) < 5e-3);
  double previous = 0.0;
  for (std::size_t k = 1; k <= 999; k += 37) {
    const double sum = j_spectral(spec, one, one, k);
    CHECK(sum >= previous);
    previous = sum;
  }
  CHECK(j_spectral(spec, s->vertex_point(0), GraphPoint{0, 0.4}) == 0.0);
}

TEST_CASE("spectral j matches the potential solve") {
  std::mt19937_64 rng(157);
  for (const NamedGraph &ng : {NamedGraph{"circle_with_tail", circle_with_tail()}, NamedGraph{"theta", theta()}}) {
    CAPTURE(ng.name);
    const GraphPtr &g = ng.graph;
    const GraphPoint z = g->vertex_point(0);
    const Spectrum spec = compute_spectrum(g, z, 1.0 / 200, 200);
    for (int trial = 0; trial < 20; ++trial) {
      const GraphPoint x = random_point(rng, *g), y = random_point(rng, *g);
      CHECK(std::abs(j_spectral(spec, x, y) - j_value(g, z, x, y)) < 1e-2);
    }
  }
}

TEST_CASE("min identity") {
  CHECK(verify_min_identity(0.3, 0.7, 2001).error < 2e-3);
  CHECK(std::abs(verify_min_identity(0.3, 0.7, 2001).partial_sum - 0.3) < 2e-3);
  const SeriesCheck zero = verify_min_identity(0.0, 0.6, 50);
  CHECK(zero.partial_sum == 0.0);
  CHECK(zero.error == 0.0);
  double previous = 1.0;
  for (std::size_t k : {10, 100, 1000, 10000}) {
    const SeriesCheck corner = verify_min_identity(1.0, 1.0, k);
    CHECK(corner.error < previous);
    CHECK(corner.error <= 2.0 / (pi * pi * static_cast<double>(k)));
    previous = corner.error;
  }
  CHECK_THROWS_AS(verify_min_identity(1.2, 0.5, 10), Error);
  CHECK_THROWS_AS(verify_min_identity(0.2, 0.5, 0), Error);
}

TEST_CASE("mesh too coarse") {
  const GraphPtr s = segment();
  CHECK_THROWS_AS(compute_spectrum(s, s->vertex_point(0), 0.5, 3), Error);
  try {
    compute_spectrum(s, s->vertex_point(0), 0.5, 3);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::MeshTooCoarse);
  }
  CHECK(compute_spectrum(s, s->vertex_point(0), 1.0 / 200, 200).size() == 200);
  CHECK_THROWS_AS(compute_spectrum(s, s->vertex_point(0), 0.0, 3), Error);
  CHECK_THROWS_AS(compute_spectrum(s, s->vertex_point(0), 0.1, 0), Error);
}
