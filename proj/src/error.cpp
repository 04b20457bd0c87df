#include "signet/error.hpp"

namespace signet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::EmptyResult: return "EmptyResult";
    case ErrorKind::DegenerateDegrees: return "DegenerateDegrees";
    case ErrorKind::NoTriangles: return "NoTriangles";
    case ErrorKind::NoCommonNeighbor: return "NoCommonNeighbor";
    case ErrorKind::RhoAtOne: return "RhoAtOne";
    case ErrorKind::Stall: return "Stall";
    case ErrorKind::RetryExhausted: return "RetryExhausted";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace signet
