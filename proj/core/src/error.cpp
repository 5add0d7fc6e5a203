#include "bmg/error.hpp"

namespace bmg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::ModeViolation: return "ModeViolation";
    case ErrorCode::UnknownLeaf: return "UnknownLeaf";
    case ErrorCode::EmptyRestriction: return "EmptyRestriction";
    case ErrorCode::NotPhylogenetic: return "NotPhylogenetic";
    case ErrorCode::DuplicateLeaf: return "DuplicateLeaf";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotTwoColored: return "NotTwoColored";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotProperlyColored: return "NotProperlyColored";
    case ErrorCode::NotABmg: return "NotABmg";
    case ErrorCode::WrongColorCount: return "WrongColorCount";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NotEnoughPairs: return "NotEnoughPairs";
    case ErrorCode::BadComponents: return "BadComponents";
    case ErrorCode::BadInstance: return "BadInstance";
    case ErrorCode::NotAnExactCover: return "NotAnExactCover";
    case ErrorCode::EmptyPart: return "EmptyPart";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateRecord: return "DuplicateRecord";
    case ErrorCode::UnknownVertexInArc: return "UnknownVertexInArc";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> line) {
  std::string out(to_string(code));
  if (line) out += " (line " + std::to_string(*line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

}  // namespace bmg
