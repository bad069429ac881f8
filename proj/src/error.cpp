#include "metgraph/error.hpp"

namespace metgraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::LoopEdge: return "LoopEdge";
  case ErrorKind::MultiEdge: return "MultiEdge";
  case ErrorKind::NonpositiveLength: return "NonpositiveLength";
  case ErrorKind::Disconnected: return "Disconnected";
  case ErrorKind::NoVertices: return "NoVertices";
  case ErrorKind::DuplicateName: return "DuplicateName";
  case ErrorKind::UnknownVertex: return "UnknownVertex";
  case ErrorKind::UnknownEdge: return "UnknownEdge";
  case ErrorKind::OffsetOutOfRange: return "OffsetOutOfRange";
  case ErrorKind::Discontinuous: return "Discontinuous";
  case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
  case ErrorKind::GraphMismatch: return "GraphMismatch";
  case ErrorKind::ConstantFunction: return "ConstantFunction";
  case ErrorKind::InvalidDirection: return "InvalidDirection";
  case ErrorKind::MassNotZero: return "MassNotZero";
  case ErrorKind::SingularSystem: return "SingularSystem";
  case ErrorKind::ResidualTooLarge: return "ResidualTooLarge";
  case ErrorKind::SourceEqualsSink: return "SourceEqualsSink";
  case ErrorKind::UnsupportedMeasure: return "UnsupportedMeasure";
  case ErrorKind::NotSeriesParallel: return "NotSeriesParallel";
  case ErrorKind::MeshTooCoarse: return "MeshTooCoarse";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::SingularSystem || kind == ErrorKind::ResidualTooLarge;
}

} // namespace metgraph
