#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace edgebal {

enum class ErrorCode {
  kLoopEdge,
  kVertexOutOfRange,
  kDuplicateEdge,
  kEdgeNotFound,
  kMalformedHeader,
  kTruncatedBits,
  kTrailingGarbage,
  kInvalidCharacter,
  kParseError,
  kParameterOutOfRange,
  kProductTooLarge,
  kTooLargeForExactIso,
  kDisconnectedGraph,
  kBudgetExceeded,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace edgebal
