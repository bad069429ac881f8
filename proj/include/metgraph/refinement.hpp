#pragma once

#include <span>
#include <vector>

#include "metgraph/graph.hpp"

namespace metgraph {

/// Where a fine edge sits inside the coarse edge it was cut from. Fine edges
/// keep the parent's orientation.
struct EdgeOrigin {
  EdgeId parent = 0;
  double offset = 0.0;
};

/// A coarse model together with a refinement of it, and the translation of
/// points between the two.
///
/// Coarse vertices keep their indices in the fine model; new vertices are
/// appended in edge order, then by offset. Fine edges are listed coarse edge
/// by coarse edge, each in increasing offset.
class Refinement {
public:
  /// The trivial refinement.
  explicit Refinement(GraphPtr graph);

  const GraphPtr &coarse() const { return coarse_; }
  const GraphPtr &fine() const { return fine_; }

  GraphPoint to_fine(GraphPoint coarse_point) const;
  GraphPoint to_coarse(GraphPoint fine_point) const;
  /// The fine vertex at a coarse point. Throws InvalidArgument if the point
  /// was not made a vertex by this refinement.
  VertexId fine_vertex(GraphPoint coarse_point) const;

  const EdgeOrigin &origin(EdgeId fine_edge) const { return origin_.at(fine_edge); }
  std::span<const EdgeId> pieces(EdgeId coarse_edge) const { return pieces_.at(coarse_edge); }

private:
  friend Refinement refine(const GraphPtr &, std::vector<std::vector<double>>);

  GraphPtr coarse_;
  GraphPtr fine_;
  std::vector<EdgeOrigin> origin_;
  std::vector<std::vector<EdgeId>> pieces_;
};

/// Cuts every coarse edge at the given interior offsets. Offsets within the
/// point tolerance of an endpoint or of each other are merged.
Refinement refine(const GraphPtr &graph, std::vector<std::vector<double>> cuts);

/// Makes every listed point a vertex.
Refinement refine_at(const GraphPtr &graph, std::span<const GraphPoint> points);

/// Splits the edge through p at p. A vertex p leaves the graph unchanged.
Refinement subdivide_at(const GraphPtr &graph, GraphPoint p);

/// Splits every edge into `parts` equal pieces.
Refinement refine_uniform(const GraphPtr &graph, int parts);

/// Makes `required` points vertices, then splits every resulting segment into
/// equal pieces of length at most `step`.
Refinement refine_mesh(const GraphPtr &graph, double step,
                       std::span<const GraphPoint> required = {});

} // namespace metgraph
