#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace signet {

enum class ErrorKind {
  DuplicateEdge,
  SelfLoop,
  EmptyGraph,
  ParseError,
  MalformedRow,
  EmptyResult,
  DegenerateDegrees,
  NoTriangles,
  NoCommonNeighbor,
  RhoAtOne,
  Stall,
  RetryExhausted,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit path) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace signet
