#include "edgebal/generators.h"

#include <charconv>
#include <string>
#include <utility>

#include "edgebal/errors.h"

namespace edgebal {
namespace {

void require(bool ok, std::string_view what) {
  if (!ok) fail(ErrorCode::kParameterOutOfRange, std::string(what));
}

}  // namespace

Graph complete_bipartite(int p, int q) {
  require(p >= 1 && q >= 1, "complete_bipartite needs p, q >= 1");
  require(p + q <= (1 << 16), "complete_bipartite too large");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(p) * q);
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < q; ++y) pairs.emplace_back(x, p + y);
  }
  return from_edge_list(p + q, pairs);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
  return from_edge_list(n, pairs);
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  return from_edge_list(n, pairs);
}

Graph complete(int n) {
  require(n >= 1, "complete needs n >= 1");
  require(n <= 4096, "complete too large");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return from_edge_list(n, pairs);
}

Graph hypercube(int d) {
  require(d >= 1 && d <= 16, "hypercube needs 1 <= d <= 16");
  const int n = 1 << d;
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < d; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) pairs.emplace_back(v, w);
    }
  }
  return from_edge_list(n, pairs);
}

Graph empty(int n) {
  require(n >= 0, "empty needs n >= 0");
  return from_edge_list(n, std::span<const std::pair<int, int>>{});
}

Graph generate(std::string_view family, std::span<const int> params) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k) {
      fail(ErrorCode::kParameterOutOfRange,
           std::string(family) + " takes " + std::to_string(k) + " parameter(s)");
    }
  };
  if (family == "complete_bipartite") {
    arity(2);
    return complete_bipartite(params[0], params[1]);
  }
  arity(1);
  if (family == "cycle") return cycle(params[0]);
  if (family == "path") return path(params[0]);
  if (family == "complete") return complete(params[0]);
  if (family == "hypercube") return hypercube(params[0]);
  if (family == "empty") return empty(params[0]);
  fail(ErrorCode::kParameterOutOfRange, "unknown family '" + std::string(family) + "'");
}

Graph generate_from_spec(std::string_view spec) {
  const auto open = spec.find('(');
  if (open == std::string_view::npos || spec.back() != ')') {
    fail(ErrorCode::kParseError, "graph spec must look like family(p,...): '" +
                                     std::string(spec) + "'");
  }
  std::vector<int> params;
  std::string_view args = spec.substr(open + 1, spec.size() - open - 2);
  while (!args.empty()) {
    const auto comma = args.find(',');
    const std::string_view tok = args.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(ErrorCode::kParseError, "bad parameter in '" + std::string(spec) + "'");
    }
    params.push_back(value);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return generate(spec.substr(0, open), params);
}

std::vector<std::string> family_names() {
  return {"complete_bipartite", "cycle", "path", "complete", "hypercube", "empty"};
}

}  // namespace edgebal
