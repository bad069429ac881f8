#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace metgraph {

enum class ErrorKind {
  // graph construction
  LoopEdge,
  MultiEdge,
  NonpositiveLength,
  Disconnected,
  NoVertices,
  DuplicateName,
  UnknownVertex,
  UnknownEdge,
  OffsetOutOfRange,
  // calculus
  Discontinuous,
  DegreeTooHigh,
  GraphMismatch,
  ConstantFunction,
  InvalidDirection,
  // solvers
  MassNotZero,
  SingularSystem,
  ResidualTooLarge,
  SourceEqualsSink,
  UnsupportedMeasure,
  NotSeriesParallel,
  MeshTooCoarse,
  InvalidArgument,
  // input
  SyntaxError,
};

std::string_view to_string(ErrorKind kind);

/// True for failures of internal numerical checks, as opposed to bad input.
bool is_internal(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace metgraph
