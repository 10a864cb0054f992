#pragma once

#include "edgebal/graph.h"

namespace edgebal {

inline constexpr int kDefaultVertexBudget = 4096;

struct ProductOptions {
  int vertex_budget = kDefaultVertexBudget;
};

// Product vertex (a, b) has id a * |V(B)| + b.
inline Vertex product_vertex(const Graph& b, Vertex a_vertex, Vertex b_vertex) {
  return a_vertex * b.vertex_count() + b_vertex;
}

// (a1,b1) ~ (a2,b2) iff (a1 = a2 and b1 ~ b2) or (b1 = b2 and a1 ~ a2).
// Throws ProductTooLarge when |V(A)|*|V(B)| exceeds the budget.
Graph cartesian_product(const Graph& a, const Graph& b, ProductOptions opts = {});

// (a1,b1) ~ (a2,b2) iff a1 ~ a2, or (a1 = a2 and b1 ~ b2).
Graph lexicographic_product(const Graph& a, const Graph& b, ProductOptions opts = {});

}  // namespace edgebal
