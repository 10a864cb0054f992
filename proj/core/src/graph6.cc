#include "edgebal/graph6.h"

#include <cstdint>
#include <utility>
#include <vector>

#include "edgebal/errors.h"

namespace edgebal {
namespace {

constexpr int kBias = 63;
constexpr char kLongForm = 126;

bool printable(char c) { return c >= 63 && c <= 126; }

std::uint64_t read_size_bytes(std::string_view s, std::size_t count) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (!printable(s[i])) fail(ErrorCode::kMalformedHeader, "bad size byte");
    n = (n << 6) | static_cast<std::uint64_t>(s[i] - kBias);
  }
  return n;
}

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  const int groups = n <= 258047 ? 3 : 6;
  out.push_back(kLongForm);
  if (groups == 6) out.push_back(kLongForm);
  for (int g = groups - 1; g >= 0; --g) {
    out.push_back(static_cast<char>(((n >> (6 * g)) & 0x3F) + kBias));
  }
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (line.substr(0, kPrefix.size()) == kPrefix) line.remove_prefix(kPrefix.size());
  if (line.empty()) fail(ErrorCode::kMalformedHeader, "empty input");

  std::uint64_t n = 0;
  if (line[0] != kLongForm) {
    if (!printable(line[0])) fail(ErrorCode::kMalformedHeader, "bad size byte");
    n = static_cast<std::uint64_t>(line[0] - kBias);
    line.remove_prefix(1);
  } else if (line.size() >= 2 && line[1] == kLongForm) {
    if (line.size() < 8) fail(ErrorCode::kMalformedHeader, "short 36-bit header");
    n = read_size_bytes(line.substr(2), 6);
    line.remove_prefix(8);
  } else {
    if (line.size() < 4) fail(ErrorCode::kMalformedHeader, "short 18-bit header");
    n = read_size_bytes(line.substr(1), 3);
    line.remove_prefix(4);
  }
  if (n > (1u << 20)) {
    fail(ErrorCode::kMalformedHeader, "vertex count " + std::to_string(n) + " too large");
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (line.size() < bytes) {
    fail(ErrorCode::kTruncatedBits, "expected " + std::to_string(bytes) +
                                        " body bytes, got " + std::to_string(line.size()));
  }
  if (line.size() > bytes) {
    fail(ErrorCode::kTrailingGarbage,
         std::to_string(line.size() - bytes) + " extra bytes");
  }

  std::vector<std::pair<int, int>> pairs;
  std::uint64_t k = 0;
  int i = 0;
  int j = 1;
  for (char c : line) {
    if (!printable(c)) fail(ErrorCode::kInvalidCharacter, "byte " + std::to_string(int(c)));
    const int group = c - kBias;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (group >> b) & 1;
      if (k >= bits) {
        if (set) fail(ErrorCode::kTrailingGarbage, "nonzero padding bits");
        continue;
      }
      if (set) pairs.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return from_edge_list(static_cast<int>(n), pairs);
}

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.vertex_count());
  std::string out;
  append_size(out, n);
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  std::vector<std::uint8_t> body(bytes, 0);
  for (const Edge& e : g.edges()) {
    const auto pos = static_cast<std::uint64_t>(e.v) * (e.v - 1) / 2 + e.u;
    body[pos / 6] |= static_cast<std::uint8_t>(1u << (5 - pos % 6));
  }
  out.reserve(out.size() + bytes);
  for (auto b : body) out.push_back(static_cast<char>(b + kBias));
  return out;
}

}  // namespace edgebal
