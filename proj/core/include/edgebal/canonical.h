#pragma once

#include <compare>
#include <string>
#include <vector>

#include "edgebal/graph.h"

namespace edgebal {

inline constexpr int kMaxExactIsoVertices = 10;

// Canonical representative of an isomorphism class, stored as the graph6
// line of the canonically relabeled graph. Two graphs on at most
// kMaxExactIsoVertices vertices are isomorphic iff their forms are equal.
//
// The labeling minimizes the column-major upper-triangle bit string over the
// leaves of an individualization-refinement search tree: the ordered
// partition is refined to an equitable one by neighbor counts, and the first
// non-singleton cell is split by individualizing each of its vertices in
// turn. Twins (u, v with N(u)\{v} = N(v)\{u}) yield identical subtrees, so
// only one per twin class is explored.
struct CanonicalForm {
  int vertex_count = 0;
  std::string graph6;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Throws TooLargeForExactIso above kMaxExactIsoVertices.
CanonicalForm canonical_form(const Graph& g);
// perm[v] is the canonical position of vertex v.
std::vector<Vertex> canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace edgebal
