#pragma once

#include "metgraph/graph.hpp"

namespace metgraph {

/// A resistance that may be infinite (an open circuit). Infinity is a flag,
/// not an IEEE overflow: R + inf = inf and 1/(L + inf) = 0 exactly.
class Resistance {
public:
  static Resistance finite(double value) { return Resistance(value, false); }
  static Resistance infinite() { return Resistance(0.0, true); }

  bool is_infinite() const { return infinite_; }
  /// Throws InvalidArgument for an infinite resistance.
  double value() const;
  /// 1 / (length + R), exactly 0 when R is infinite.
  double conductance_in_series_with(double length) const;

  friend Resistance operator+(Resistance a, Resistance b) {
    if (a.infinite_ || b.infinite_) return infinite();
    return finite(a.value_ + b.value_);
  }

private:
  Resistance(double value, bool infinite) : value_(value), infinite_(infinite) {}

  double value_;
  bool infinite_;
};

/// R_e: resistance between the endpoints of e once its interior is removed.
/// Infinite for bridges.
Resistance edge_deleted_resistance(const GraphPtr &g, EdgeId e);

/// r(x, y) for x on edge e at arclength t (edge coordinate) and y one of e's
/// endpoints: s - s^2 / (L_e + R_e) with s the distance from y along e.
/// Throws OffsetOutOfRange, InvalidArgument (y not an endpoint).
double resistance_on_segment(const GraphPtr &g, EdgeId e, double t, VertexId toward);

/// Same, with R_e already known.
double resistance_on_segment(double length, Resistance deleted, double distance);

struct TwoTerminalNetwork {
  GraphPtr graph;
  GraphPoint x;
  GraphPoint y;
};

/// Terminal resistance by exhaustive parallel merging and series elimination
/// (dangling non-terminal branches carry no current and are pruned). Throws
/// NotSeriesParallel when the network does not collapse to one edge, and
/// InvalidArgument for coincident terminals.
double series_parallel_resistance(const TwoTerminalNetwork &network);

} // namespace metgraph
