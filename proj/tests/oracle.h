#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is computed straight from the definitions with the
// simplest possible algorithms; nothing calls into the library except to
// read a Graph's vertex and edge lists.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "edgebal/graph.h"

namespace oracle {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

using Matrix = std::vector<std::vector<int>>;
using Pair = std::pair<int, int>;

inline std::vector<Pair> edge_pairs(const edgebal::Graph& g) {
  std::vector<Pair> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline Matrix floyd_warshall(int n, const std::vector<Pair>& edges) {
  Matrix d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

inline Matrix floyd_warshall(const edgebal::Graph& g) {
  return floyd_warshall(g.vertex_count(), edge_pairs(g));
}

inline bool connected(const Matrix& d) {
  for (const auto& row : d) {
    for (int x : row) {
      if (x >= kInf) return false;
    }
  }
  return true;
}

inline int diameter(const Matrix& d) {
  int best = 0;
  for (const auto& row : d) {
    for (int x : row) best = std::max(best, x);
  }
  return best;
}

inline int to_edge(const Matrix& d, int w, Pair g) { return std::min(d[w][g.first], d[w][g.second]); }

struct Counts {
  int n_alpha = 0, n_beta = 0, n_zero = 0;
  int m_alpha = 0, m_beta = 0, m_zero = 0;  // base edge excluded
};

// Counts for the oriented edge (alpha, beta).
inline Counts counts(const Matrix& d, const std::vector<Pair>& edges, int alpha, int beta) {
  Counts c;
  const int n = static_cast<int>(d.size());
  for (int w = 0; w < n; ++w) {
    if (d[w][alpha] < d[w][beta]) {
      ++c.n_alpha;
    } else if (d[w][beta] < d[w][alpha]) {
      ++c.n_beta;
    } else {
      ++c.n_zero;
    }
  }
  const Pair base{std::min(alpha, beta), std::max(alpha, beta)};
  for (const Pair& g : edges) {
    if (g == base) continue;
    const int a = to_edge(d, alpha, g);
    const int b = to_edge(d, beta, g);
    if (a < b) {
      ++c.m_alpha;
    } else if (b < a) {
      ++c.m_beta;
    } else {
      ++c.m_zero;
    }
  }
  return c;
}

// Cell sizes keyed by (d(g, alpha), d(g, beta)) over E minus the base edge.
inline std::map<Pair, int> cells(const Matrix& d, const std::vector<Pair>& edges, int alpha,
                                 int beta) {
  std::map<Pair, int> out;
  const Pair base{std::min(alpha, beta), std::max(alpha, beta)};
  for (const Pair& g : edges) {
    if (g == base) continue;
    ++out[{to_edge(d, alpha, g), to_edge(d, beta, g)}];
  }
  return out;
}

inline int cell(const std::map<Pair, int>& c, int a, int b) {
  const auto it = c.find({a, b});
  return it == c.end() ? 0 : it->second;
}

inline std::int64_t szeged(const edgebal::Graph& g) {
  const auto d = floyd_warshall(g);
  const auto e = edge_pairs(g);
  std::int64_t total = 0;
  for (auto [u, v] : e) {
    const Counts c = counts(d, e, u, v);
    total += static_cast<std::int64_t>(c.n_alpha) * c.n_beta;
  }
  return total;
}

inline std::int64_t edge_szeged(const edgebal::Graph& g, bool augmented) {
  const auto d = floyd_warshall(g);
  const auto e = edge_pairs(g);
  const int plus = augmented ? 1 : 0;
  std::int64_t total = 0;
  for (auto [u, v] : e) {
    const Counts c = counts(d, e, u, v);
    total += static_cast<std::int64_t>(c.m_alpha + plus) * (c.m_beta + plus);
  }
  return total;
}

// t values in [1, limit] for which every edge's pair (a, b) has a = t b or
// b = t a. `limit` must exceed every count so that larger t are decided by
// the (0, 0) case alone.
template <typename PairOf>
std::set<int> ratio_values(const std::vector<Pair>& edges, int limit, PairOf pair_of) {
  std::set<int> out;
  for (int t = 1; t <= limit; ++t) {
    bool ok = true;
    for (const Pair& e : edges) {
      const auto [a, b] = pair_of(e);
      if (a != t * b && b != t * a) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(t);
  }
  return out;
}

inline std::set<int> gt_edb(const edgebal::Graph& g, bool augmented, int limit) {
  const auto d = floyd_warshall(g);
  const auto e = edge_pairs(g);
  const int plus = augmented ? 1 : 0;
  return ratio_values(e, limit, [&](Pair f) {
    const Counts c = counts(d, e, f.first, f.second);
    return Pair{c.m_alpha + plus, c.m_beta + plus};
  });
}

inline std::set<int> gt_db(const edgebal::Graph& g, int limit) {
  const auto d = floyd_warshall(g);
  const auto e = edge_pairs(g);
  return ratio_values(e, limit, [&](Pair f) {
    const Counts c = counts(d, e, f.first, f.second);
    return Pair{c.n_alpha, c.n_beta};
  });
}

// One orientation per edge with cell(i-1,i) = t cell(i,i-1) + t - 1 for all
// i in [1, diameter - 1].
inline std::set<int> gt_sedb(const edgebal::Graph& g, int limit) {
  const auto d = floyd_warshall(g);
  const auto e = edge_pairs(g);
  const int diam = diameter(d);
  std::set<int> out;
  for (int t = 1; t <= limit; ++t) {
    bool all_edges = true;
    for (auto [u, v] : e) {
      const auto c = cells(d, e, u, v);
      bool forward = true;
      bool backward = true;
      for (int i = 1; i <= diam - 1; ++i) {
        const int near_u = cell(c, i - 1, i);
        const int near_v = cell(c, i, i - 1);
        forward = forward && near_u == t * near_v + t - 1;
        backward = backward && near_v == t * near_u + t - 1;
      }
      if (!forward && !backward) {
        all_edges = false;
        break;
      }
    }
    if (all_edges) out.insert(t);
  }
  return out;
}

// Upper-triangle bits in column-major order (0,1), (0,2), (1,2), ... as a
// number with the first pair most significant.
inline std::uint64_t triangle_code(int n, const std::vector<std::vector<bool>>& adj) {
  std::uint64_t code = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) code = (code << 1) | (adj[u][v] ? 1u : 0u);
  }
  return code;
}

// Smallest code over all n! relabelings. Exponential; fine up to n = 8.
inline std::uint64_t brute_canonical(int n, const std::vector<Pair>& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  do {
    for (auto& row : adj) std::fill(row.begin(), row.end(), false);
    for (auto [u, v] : edges) {
      adj[perm[u]][perm[v]] = true;
      adj[perm[v]][perm[u]] = true;
    }
    best = std::min(best, triangle_code(n, adj));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::uint64_t brute_canonical(const edgebal::Graph& g) {
  return brute_canonical(g.vertex_count(), edge_pairs(g));
}

// Subset walk over all labeled graphs on n vertices. `keep` filters labeled
// graphs before the expensive canonicalization.
template <typename Keep>
std::set<std::uint64_t> naive_classes(int n, Keep keep) {
  std::vector<Pair> slots;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  }
  std::set<std::uint64_t> seen_labeled;
  std::set<std::uint64_t> classes;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Pair> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1u) edges.push_back(slots[i]);
    }
    const Matrix d = floyd_warshall(n, edges);
    if (!keep(d, edges)) continue;
    classes.insert(brute_canonical(n, edges));
  }
  return classes;
}

inline std::set<std::uint64_t> naive_connected_classes(int n) {
  return naive_classes(n, [](const Matrix& d, const std::vector<Pair>&) { return connected(d); });
}

// Connected, bipartite, diameter exactly 2.
inline bool bipartite_diameter_two(const Matrix& d, const std::vector<Pair>& edges) {
  if (!connected(d) || diameter(d) != 2) return false;
  // Connected: bipartite iff no edge joins two vertices at equal parity from 0.
  for (auto [u, v] : edges) {
    if ((d[0][u] - d[0][v]) % 2 == 0) return false;
  }
  return true;
}

// Random connected graph: a random tree plus each other pair with
// probability p.
inline edgebal::Graph random_connected(std::mt19937& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  std::set<Pair> used;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    const int u = parent(rng);
    edges.emplace_back(u, v);
    used.insert({u, v});
  }
  std::bernoulli_distribution coin(p);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (!used.count({u, v}) && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return edgebal::from_edge_list(n, edges);
}

inline std::vector<edgebal::Vertex> random_permutation(std::mt19937& rng, int n) {
  std::vector<edgebal::Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
