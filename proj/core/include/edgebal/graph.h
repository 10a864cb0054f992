#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace edgebal {

using Vertex = std::int32_t;

// Canonical storage form of an undirected edge: u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// An edge with an explicit analysis orientation: alpha is the side whose
// counts are reported first.
struct OrientedEdge {
  Vertex alpha = 0;
  Vertex beta = 0;

  OrientedEdge reversed() const { return {beta, alpha}; }
  Edge canonical() const {
    return alpha < beta ? Edge{alpha, beta} : Edge{beta, alpha};
  }

  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

inline OrientedEdge oriented(const Edge& e) { return {e.u, e.v}; }

enum class DuplicatePolicy {
  kMerge,   // silently collapse repeated pairs
  kStrict,  // raise DuplicateEdge
};

// Immutable simple undirected graph on vertices 0..vertex_count()-1.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Sorted by (u, v).
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool adjacent(Vertex a, Vertex b) const;
  // Position of the edge in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count();
  }

 private:
  friend Graph from_edge_list(int, std::span<const std::pair<int, int>>,
                              DuplicatePolicy);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Validates and canonicalizes. Throws LoopEdge, VertexOutOfRange, or (under
// kStrict) DuplicateEdge.
Graph from_edge_list(int vertex_count,
                     std::span<const std::pair<int, int>> pairs,
                     DuplicatePolicy policy = DuplicatePolicy::kMerge);

Graph from_edge_list(int vertex_count,
                     std::initializer_list<std::pair<int, int>> pairs,
                     DuplicatePolicy policy = DuplicatePolicy::kMerge);

// Vertex v of g becomes perm[v] in the result. perm must be a permutation.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace edgebal
