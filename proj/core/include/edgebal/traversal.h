#pragma once

#include <optional>
#include <vector>

#include "edgebal/graph.h"

namespace edgebal {

// The graph with zero vertices counts as connected.
bool is_connected(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  // color[v] in {0, 1}; present iff bipartite. Each component's smallest
  // vertex gets color 0.
  std::optional<std::vector<int>> coloring;
};

Bipartition is_bipartite(const Graph& g);

}  // namespace edgebal
