#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edgebal/graph.h"

namespace edgebal {

// All-pairs hop distances, row-major, 16-bit entries.
class DistanceMatrix {
 public:
  using value_type = std::uint16_t;
  static constexpr value_type kUnreachable = 0xFFFF;

  DistanceMatrix() = default;
  // BFS from every vertex. Graphs above 65534 vertices are rejected.
  explicit DistanceMatrix(const Graph& g);

  int size() const { return n_; }
  value_type operator()(Vertex a, Vertex b) const {
    return cells_[static_cast<std::size_t>(a) * n_ + b];
  }
  std::span<const value_type> row(Vertex a) const {
    return {cells_.data() + static_cast<std::size_t>(a) * n_,
            static_cast<std::size_t>(n_)};
  }
  // True when no entry is kUnreachable.
  bool connected() const { return connected_; }

 private:
  int n_ = 0;
  bool connected_ = true;
  std::vector<value_type> cells_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// min(d(w, f.u), d(w, f.v)).
inline int vertex_edge_distance(const DistanceMatrix& d, Vertex w, const Edge& f) {
  const auto a = d(w, f.u);
  const auto b = d(w, f.v);
  return a < b ? a : b;
}

// Minimum over the four endpoint pairs.
inline int edge_edge_distance(const DistanceMatrix& d, const Edge& f, const Edge& g) {
  const int a = vertex_edge_distance(d, f.u, g);
  const int b = vertex_edge_distance(d, f.v, g);
  return a < b ? a : b;
}

// Largest finite entry. Throws DisconnectedGraph.
int diameter(const DistanceMatrix& d);

// Throws DisconnectedGraph when d has unreachable pairs; `what` names the
// calling analysis in the message.
void require_connected(const DistanceMatrix& d, const char* what);

}  // namespace edgebal
