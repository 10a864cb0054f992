#include "edgebal/graph.h"

#include <algorithm>
#include <string>

#include "edgebal/errors.h"

namespace edgebal {

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) {
    return false;
  }
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  const Edge key = a < b ? Edge{a, b} : Edge{b, a};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph from_edge_list(int vertex_count,
                     std::span<const std::pair<int, int>> pairs,
                     DuplicatePolicy policy) {
  if (vertex_count < 0) {
    fail(ErrorCode::kParameterOutOfRange,
         "negative vertex count " + std::to_string(vertex_count));
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      fail(ErrorCode::kVertexOutOfRange,
           "(" + std::to_string(a) + "," + std::to_string(b) + ") with n=" +
               std::to_string(vertex_count));
    }
    if (a == b) fail(ErrorCode::kLoopEdge, "(" + std::to_string(a) + "," +
                                               std::to_string(b) + ")");
    edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    if (policy == DuplicatePolicy::kStrict) {
      fail(ErrorCode::kDuplicateEdge, "(" + std::to_string(dup->u) + "," +
                                          std::to_string(dup->v) + ")");
    }
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
  for (const Edge& e : edges) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  g.edges_ = std::move(edges);
  return g;
}

Graph from_edge_list(int vertex_count,
                     std::initializer_list<std::pair<int, int>> pairs,
                     DuplicatePolicy policy) {
  return from_edge_list(
      vertex_count, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()),
      policy);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) {
    fail(ErrorCode::kParameterOutOfRange, "permutation size mismatch");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Vertex p : perm) {
    if (p < 0 || p >= n || seen[p]) {
      fail(ErrorCode::kParameterOutOfRange, "not a permutation");
    }
    seen[p] = true;
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edges().size());
  for (const Edge& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
  return from_edge_list(n, pairs);
}

}  // namespace edgebal
