#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bmg {

enum class ErrorCode {
  // core
  UnknownVertex,
  DuplicateVertex,
  SelfLoop,
  ModeViolation,
  // tree
  UnknownLeaf,
  EmptyRestriction,
  NotPhylogenetic,
  DuplicateLeaf,
  // recognition
  EmptyGraph,
  NotTwoColored,
  NotConnected,
  NotProperlyColored,
  NotABmg,
  // ilp
  WrongColorCount,
  TooFewVertices,
  Infeasible,
  BudgetExceeded,
  // generators
  BadParameters,
  NotEnoughPairs,
  BadComponents,
  BadInstance,
  NotAnExactCover,
  EmptyPart,
  // io
  ParseError,
  DuplicateRecord,
  UnknownVertexInArc,
};

std::string_view to_string(ErrorCode code);

/// Exception type thrown by every library operation. The code identifies the
/// failure class; parse failures additionally carry a 1-based line number.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace bmg
