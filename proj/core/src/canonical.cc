#include "edgebal/canonical.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <vector>

#include "canonical_core.h"
#include "edgebal/errors.h"
#include "edgebal/graph6.h"

namespace edgebal {
namespace detail {
namespace {

using Cell = std::vector<std::int8_t>;
using Partition = std::vector<Cell>;

std::uint32_t mask_of(const Cell& cell) {
  std::uint32_t m = 0;
  for (auto v : cell) m |= 1u << v;
  return m;
}

// Splits cells by neighbor count into each splitter cell until equitable.
// Groups are ordered by ascending count, so the result depends only on the
// structure and the incoming cell order.
void refine(const AdjMasks& adj, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const std::uint32_t splitter = mask_of(cells[s]);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        Cell& cell = cells[c];
        if (cell.size() == 1) continue;
        std::array<int, kMaxExactIsoVertices> count{};
        bool uniform = true;
        for (std::size_t k = 0; k < cell.size(); ++k) {
          count[k] = std::popcount(adj[cell[k]] & splitter);
          if (count[k] != count[0]) uniform = false;
        }
        if (uniform) continue;
        std::vector<std::pair<int, std::int8_t>> keyed;
        for (std::size_t k = 0; k < cell.size(); ++k) keyed.emplace_back(count[k], cell[k]);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        Partition pieces;
        for (std::size_t k = 0; k < keyed.size(); ++k) {
          if (k == 0 || keyed[k].first != keyed[k - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[k].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(),
                     pieces.end());
        changed = true;
        break;
      }
    }
  }
}

std::uint64_t leaf_key(const AdjMasks& adj, const Partition& cells, int n) {
  std::array<std::int8_t, kMaxExactIsoVertices> order{};
  for (std::size_t k = 0; k < cells.size(); ++k) order[k] = cells[k][0];
  const int bits = triangle_bits(n);
  std::uint64_t key = 0;
  int pos = 0;
  for (int j = 1; j < n; ++j) {
    const std::uint32_t row = adj[order[j]];
    for (int i = 0; i < j; ++i, ++pos) {
      if (row >> order[i] & 1u) key |= std::uint64_t{1} << (bits - 1 - pos);
    }
  }
  return key;
}

bool twins(const AdjMasks& adj, int u, int v) {
  return (adj[u] & ~(1u << v)) == (adj[v] & ~(1u << u));
}

struct Search {
  const AdjMasks& adj;
  int n;
  bool found = false;
  CanonResult best;

  void run(Partition cells) {
    refine(adj, cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      const std::uint64_t key = leaf_key(adj, cells, n);
      if (!found || key < best.key) {
        found = true;
        best.key = key;
        for (std::size_t k = 0; k < cells.size(); ++k) best.order[k] = cells[k][0];
      }
      return;
    }
    const auto index = target - cells.begin();
    const Cell cell = *target;
    std::vector<std::int8_t> tried;
    for (auto v : cell) {
      if (std::any_of(tried.begin(), tried.end(),
                      [&](std::int8_t u) { return twins(adj, u, v); })) {
        continue;
      }
      tried.push_back(v);
      Partition next = cells;
      Cell rest;
      for (auto w : cell) {
        if (w != v) rest.push_back(w);
      }
      next[index] = Cell{v};
      next.insert(next.begin() + index + 1, rest);
      run(std::move(next));
    }
  }
};

}  // namespace

CanonResult canonicalize(const AdjMasks& adj, int n) {
  if (n <= 1) {
    CanonResult r;
    r.order[0] = 0;
    return r;
  }
  Partition start(1);
  for (int v = 0; v < n; ++v) start[0].push_back(static_cast<std::int8_t>(v));
  Search search{adj, n, false, {}};
  search.run(std::move(start));
  return search.best;
}

AdjMasks masks_of(const Graph& g) {
  AdjMasks adj{};
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  return adj;
}

Graph graph_from_key(std::uint64_t key, int n) {
  const int bits = triangle_bits(n);
  std::vector<std::pair<int, int>> pairs;
  int pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      if (key >> (bits - 1 - pos) & 1u) pairs.emplace_back(i, j);
    }
  }
  return from_edge_list(n, pairs);
}

}  // namespace detail

namespace {

detail::CanonResult canon(const Graph& g) {
  if (g.vertex_count() > kMaxExactIsoVertices) {
    fail(ErrorCode::kTooLargeForExactIso,
         std::to_string(g.vertex_count()) + " vertices exceeds " +
             std::to_string(kMaxExactIsoVertices));
  }
  return detail::canonicalize(detail::masks_of(g), g.vertex_count());
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const auto r = canon(g);
  return {g.vertex_count(), to_graph6(detail::graph_from_key(r.key, g.vertex_count()))};
}

std::vector<Vertex> canonical_labeling(const Graph& g) {
  const auto r = canon(g);
  std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
  for (int k = 0; k < g.vertex_count(); ++k) perm[r.order[k]] = k;
  return perm;
}

Graph canonical_graph(const Graph& g) {
  const auto r = canon(g);
  return detail::graph_from_key(r.key, g.vertex_count());
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  const int n = std::max(a.vertex_count(), b.vertex_count());
  if (n > kMaxExactIsoVertices) {
    fail(ErrorCode::kTooLargeForExactIso,
         std::to_string(n) + " vertices exceeds " + std::to_string(kMaxExactIsoVertices));
  }
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace edgebal
