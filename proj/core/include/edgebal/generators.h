#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgebal/graph.h"

namespace edgebal {

// Standard families. All throw ParameterOutOfRange on degenerate input.

// Parts are {0..p-1} and {p..p+q-1}; p, q >= 1.
Graph complete_bipartite(int p, int q);
// n >= 3.
Graph cycle(int n);
// n >= 1 vertices, n-1 edges.
Graph path(int n);
// n >= 1.
Graph complete(int n);
// 1 <= d <= 16; vertex ids are the bit vectors.
Graph hypercube(int d);
// n >= 0 isolated vertices.
Graph empty(int n);

// Dispatch by family name ("complete_bipartite", "cycle", "path",
// "complete", "hypercube", "empty") for the CLI and config-driven corpora.
Graph generate(std::string_view family, std::span<const int> params);

// Parses "family(p[,q])", e.g. "cycle(4)" or "complete_bipartite(2,3)".
Graph generate_from_spec(std::string_view spec);

// Names accepted by generate().
std::vector<std::string> family_names();

}  // namespace edgebal
