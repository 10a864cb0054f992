#include "edgebal/classify.h"

#include <algorithm>
#include <string>

#include "edgebal/errors.h"
#include "edgebal/traversal.h"

namespace edgebal {
namespace {

void require_t(int t) {
  if (t < 1) fail(ErrorCode::kParameterOutOfRange, "t must be >= 1, got " + std::to_string(t));
}

std::vector<EdgeProfile> profiles_of(const Graph& g, const DistanceMatrix& d) {
  return edge_profiles(g, d);
}

// Collects every t in [1, bound] accepted by `accepts`; `vacuous` short-cuts
// to the all-t answer.
template <typename Accepts>
TValues scan(bool vacuous, int bound, Accepts accepts) {
  TValues out;
  if (vacuous) {
    out.all = true;
    return out;
  }
  for (int t = 1; t <= std::max(bound, 1); ++t) {
    if (accepts(t)) out.values.push_back(t);
  }
  return out;
}

std::optional<NicelyBalanced> nicely(std::span<const std::pair<int, int>> pairs) {
  if (pairs.empty()) return std::nullopt;
  auto [lo, hi] = pairs.front();
  if (lo > hi) std::swap(lo, hi);
  for (auto [a, b] : pairs) {
    if (std::min(a, b) != lo || std::max(a, b) != hi) return std::nullopt;
  }
  if (lo == 0) {
    if (hi == 0) return NicelyBalanced{1, 0};
    return std::nullopt;
  }
  if (hi % lo != 0) return std::nullopt;
  return NicelyBalanced{hi / lo, lo};
}

bool sedb_oriented(const EdgeProfile& p, int diameter, int t, bool flip) {
  for (int i = 1; i <= diameter - 1; ++i) {
    const int heavy = flip ? p.nearer_beta_at(i) : p.nearer_alpha_at(i);
    const int light = flip ? p.nearer_alpha_at(i) : p.nearer_beta_at(i);
    if (heavy != t * light + (t - 1)) return false;
  }
  return true;
}

}  // namespace

bool TValues::contains(int t) const {
  if (t < 1) return false;
  return all || std::binary_search(values.begin(), values.end(), t);
}

bool is_gt_db(std::span<const EdgeProfile> edges, int t) {
  require_t(t);
  return std::all_of(edges.begin(), edges.end(), [t](const EdgeProfile& p) {
    return in_ratio(p.vertex.n_alpha, p.vertex.n_beta, t);
  });
}

TValues gt_db_values(std::span<const EdgeProfile> edges) {
  int bound = 1;
  for (const auto& p : edges) bound = std::max({bound, p.vertex.n_alpha, p.vertex.n_beta});
  return scan(edges.empty(), bound, [&](int t) { return is_gt_db(edges, t); });
}

bool is_gt_edb(std::span<const EdgeProfile> edges, int t, Convention conv) {
  require_t(t);
  return std::all_of(edges.begin(), edges.end(), [&](const EdgeProfile& p) {
    const EdgeCounts c = under(conv, p.strict);
    return in_ratio(c.m_alpha, c.m_beta, t);
  });
}

TValues gt_edb_values(std::span<const EdgeProfile> edges, Convention conv) {
  int bound = 1;
  bool vacuous = true;
  for (const auto& p : edges) {
    const EdgeCounts c = under(conv, p.strict);
    bound = std::max({bound, c.m_alpha, c.m_beta});
    if (c.m_alpha != 0 || c.m_beta != 0) vacuous = false;
  }
  return scan(vacuous, bound, [&](int t) { return is_gt_edb(edges, t, conv); });
}

std::optional<NicelyBalanced> gt_nedb(std::span<const EdgeProfile> edges,
                                      Convention conv) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges.size());
  for (const auto& p : edges) {
    const EdgeCounts c = under(conv, p.strict);
    pairs.emplace_back(c.m_alpha, c.m_beta);
  }
  return nicely(pairs);
}

std::optional<NicelyBalanced> gt_ndb(std::span<const EdgeProfile> edges) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges.size());
  for (const auto& p : edges) pairs.emplace_back(p.vertex.n_alpha, p.vertex.n_beta);
  return nicely(pairs);
}

bool is_gt_sedb(std::span<const EdgeProfile> edges, int diameter, int t) {
  require_t(t);
  return std::all_of(edges.begin(), edges.end(), [&](const EdgeProfile& p) {
    return sedb_oriented(p, diameter, t, false) || sedb_oriented(p, diameter, t, true);
  });
}

TValues gt_sedb_values(std::span<const EdgeProfile> edges, int diameter) {
  // heavy + 1 = t * (light + 1) at level 1 bounds t by the largest cell + 1.
  int bound = 1;
  for (const auto& p : edges) {
    bound = std::max({bound, p.nearer_alpha_at(1) + 1, p.nearer_beta_at(1) + 1});
  }
  return scan(edges.empty() || diameter < 2, bound,
              [&](int t) { return is_gt_sedb(edges, diameter, t); });
}

bool is_sedb(std::span<const EdgeProfile> edges) {
  return std::all_of(edges.begin(), edges.end(), [](const EdgeProfile& p) {
    for (int i = 1; i <= p.levels(); ++i) {
      if (p.nearer_alpha_at(i) != p.nearer_beta_at(i)) return false;
    }
    return true;
  });
}

bool is_gt_edb_db_aligned(std::span<const EdgeProfile> edges, int t, Convention conv) {
  require_t(t);
  return std::all_of(edges.begin(), edges.end(), [&](const EdgeProfile& p) {
    const EdgeCounts c = under(conv, p.strict);
    const VertexCounts& v = p.vertex;
    const bool forward = c.m_alpha == t * c.m_beta && v.n_alpha == t * v.n_beta;
    const bool backward = c.m_beta == t * c.m_alpha && v.n_beta == t * v.n_alpha;
    return forward || backward;
  });
}

bool is_gt_db(const Graph& g, const DistanceMatrix& d, int t) {
  return is_gt_db(profiles_of(g, d), t);
}
TValues gt_db_values(const Graph& g, const DistanceMatrix& d) {
  return gt_db_values(profiles_of(g, d));
}
bool is_gt_edb(const Graph& g, const DistanceMatrix& d, int t, Convention conv) {
  return is_gt_edb(profiles_of(g, d), t, conv);
}
TValues gt_edb_values(const Graph& g, const DistanceMatrix& d, Convention conv) {
  return gt_edb_values(profiles_of(g, d), conv);
}
std::optional<NicelyBalanced> gt_nedb(const Graph& g, const DistanceMatrix& d,
                                      Convention conv) {
  return gt_nedb(profiles_of(g, d), conv);
}
std::optional<NicelyBalanced> gt_ndb(const Graph& g, const DistanceMatrix& d) {
  return gt_ndb(profiles_of(g, d));
}
bool is_gt_sedb(const Graph& g, const DistanceMatrix& d, int t) {
  return is_gt_sedb(profiles_of(g, d), diameter(d), t);
}
TValues gt_sedb_values(const Graph& g, const DistanceMatrix& d) {
  return gt_sedb_values(profiles_of(g, d), diameter(d));
}
bool is_sedb(const Graph& g, const DistanceMatrix& d) { return is_sedb(profiles_of(g, d)); }

ClassificationReport full_report(const Graph& g, const DistanceMatrix& d,
                                 Convention conv) {
  const auto profiles = profiles_of(g, d);
  ClassificationReport r;
  r.convention = conv;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  r.diameter = diameter(d);
  r.bipartite = is_bipartite(g).bipartite;
  r.gt_db_values = gt_db_values(profiles);
  r.gt_edb_values = gt_edb_values(profiles, conv);
  r.gt_sedb_values = gt_sedb_values(profiles, r.diameter);
  r.gt_nedb = gt_nedb(profiles, conv);
  r.gt_ndb = gt_ndb(profiles);
  r.db = r.gt_db_values.contains(1);
  r.edb = r.gt_edb_values.contains(1);
  r.per_edge_counts.reserve(profiles.size());
  for (const auto& p : profiles) {
    r.per_edge_counts.push_back({oriented(p.edge), conv, p.vertex, under(conv, p.strict)});
  }
  return r;
}

ClassificationReport full_report(const Graph& g, Convention conv) {
  return full_report(g, all_pairs_distances(g), conv);
}

}  // namespace edgebal
