#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "metgraph/calculus.hpp"
#include "metgraph/graph.hpp"
#include "metgraph/spectral.hpp"

namespace metgraph {

/// Graph text format, one declaration per line, '#' starts a comment:
///
///     vertex <name>
///     edge <id> <u> <v> <length>
///
/// Names match [A-Za-z0-9_]+. Declaration order fixes indices and edge
/// orientation. Errors carry the offending line number.
GraphPtr parse_graph(std::string_view text);
GraphPtr parse_graph_file(const std::string &path);

/// "<vertex>" or "<edge>:<t>".
GraphPoint parse_point(const WeightedGraph &g, std::string_view text);

/// Measure CSV: header "kind,location,c0,...", atom rows "atom,<loc>,<mass>"
/// in canonical point order, then "density,<edge>,<c0>,..." rows in edge
/// order for edges with a nonzero density.
void write_measure_csv(std::ostream &out, const GraphMeasure &mu);
GraphMeasure parse_measure_csv(const GraphPtr &g, std::string_view text);

/// "n,lambda" rows (n from 1); with `vectors`, a second block "n,point,value"
/// with each eigenfunction at every mesh vertex, located in host coordinates.
void write_spectrum_csv(std::ostream &out, const Spectrum &spectrum, bool vectors);

} // namespace metgraph
