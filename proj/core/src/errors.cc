#include "edgebal/errors.h"

namespace edgebal {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kEdgeNotFound: return "EdgeNotFound";
    case ErrorCode::kMalformedHeader: return "MalformedHeader";
    case ErrorCode::kTruncatedBits: return "TruncatedBits";
    case ErrorCode::kTrailingGarbage: return "TrailingGarbage";
    case ErrorCode::kInvalidCharacter: return "InvalidCharacter";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::kProductTooLarge: return "ProductTooLarge";
    case ErrorCode::kTooLargeForExactIso: return "TooLargeForExactIso";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

void fail(ErrorCode code, const std::string& detail) {
  std::string msg(to_string(code));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  throw Error(code, msg);
}

}  // namespace edgebal
