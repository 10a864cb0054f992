#include "edgebal/products.h"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edgebal/errors.h"

namespace edgebal {
namespace {

void check_budget(const Graph& a, const Graph& b, const ProductOptions& opts) {
  const auto n = static_cast<std::int64_t>(a.vertex_count()) * b.vertex_count();
  if (n > opts.vertex_budget) {
    fail(ErrorCode::kProductTooLarge, std::to_string(n) + " vertices exceeds budget " +
                                          std::to_string(opts.vertex_budget));
  }
}

}  // namespace

Graph cartesian_product(const Graph& a, const Graph& b, ProductOptions opts) {
  check_budget(a, b, opts);
  const int na = a.vertex_count();
  const int nb = b.vertex_count();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(na) * b.edge_count() +
                static_cast<std::size_t>(nb) * a.edge_count());
  for (Vertex x = 0; x < na; ++x) {
    for (const Edge& e : b.edges()) {
      pairs.emplace_back(product_vertex(b, x, e.u), product_vertex(b, x, e.v));
    }
  }
  for (const Edge& e : a.edges()) {
    for (Vertex y = 0; y < nb; ++y) {
      pairs.emplace_back(product_vertex(b, e.u, y), product_vertex(b, e.v, y));
    }
  }
  return from_edge_list(na * nb, pairs);
}

Graph lexicographic_product(const Graph& a, const Graph& b, ProductOptions opts) {
  check_budget(a, b, opts);
  const int na = a.vertex_count();
  const int nb = b.vertex_count();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(a.edge_count()) * nb * nb +
                static_cast<std::size_t>(na) * b.edge_count());
  for (Vertex x = 0; x < na; ++x) {
    for (const Edge& e : b.edges()) {
      pairs.emplace_back(product_vertex(b, x, e.u), product_vertex(b, x, e.v));
    }
  }
  for (const Edge& e : a.edges()) {
    for (Vertex y1 = 0; y1 < nb; ++y1) {
      for (Vertex y2 = 0; y2 < nb; ++y2) {
        pairs.emplace_back(product_vertex(b, e.u, y1), product_vertex(b, e.v, y2));
      }
    }
  }
  return from_edge_list(na * nb, pairs);
}

}  // namespace edgebal
