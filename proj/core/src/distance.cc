#include "edgebal/distance.h"

#include <algorithm>
#include <string>

#include "edgebal/errors.h"

namespace edgebal {

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()) {
  if (n_ >= kUnreachable) {
    fail(ErrorCode::kParameterOutOfRange, "too many vertices for 16-bit distances");
  }
  cells_.assign(static_cast<std::size_t>(n_) * n_, kUnreachable);
  std::vector<Vertex> frontier;
  std::vector<Vertex> next;
  for (Vertex s = 0; s < n_; ++s) {
    value_type* dist = cells_.data() + static_cast<std::size_t>(s) * n_;
    dist[s] = 0;
    frontier.assign(1, s);
    value_type level = 0;
    while (!frontier.empty()) {
      ++level;
      next.clear();
      for (Vertex v : frontier) {
        for (Vertex w : g.neighbors(v)) {
          if (dist[w] == kUnreachable) {
            dist[w] = level;
            next.push_back(w);
          }
        }
      }
      frontier.swap(next);
    }
  }
  connected_ = std::find(cells_.begin(), cells_.end(), kUnreachable) == cells_.end();
}

DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

int diameter(const DistanceMatrix& d) {
  require_connected(d, "diameter");
  int best = 0;
  for (Vertex a = 0; a < d.size(); ++a) {
    for (auto x : d.row(a)) best = std::max<int>(best, x);
  }
  return best;
}

void require_connected(const DistanceMatrix& d, const char* what) {
  if (!d.connected()) {
    fail(ErrorCode::kDisconnectedGraph, std::string(what) + " requires a connected graph");
  }
}

}  // namespace edgebal
