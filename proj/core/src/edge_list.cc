#include "edgebal/edge_list.h"

#include <istream>
#include <sstream>
#include <vector>

#include "edgebal/errors.h"

namespace edgebal {

Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    fail(ErrorCode::kParseError, "edge list header must be \"n m\"");
  }
  if (n > (1 << 20)) fail(ErrorCode::kParseError, "vertex count too large");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      fail(ErrorCode::kParseError, "expected " + std::to_string(m) +
                                       " edges, read " + std::to_string(k));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(ErrorCode::kVertexOutOfRange,
           "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) fail(ErrorCode::kParseError, "unexpected trailing token '" + rest + "'");
  return from_edge_list(static_cast<int>(n), pairs, DuplicatePolicy::kStrict);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace edgebal
