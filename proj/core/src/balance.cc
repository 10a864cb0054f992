#include "edgebal/balance.h"

#include <algorithm>
#include <string>

#include "edgebal/errors.h"

namespace edgebal {
namespace {

void check_inputs(const Graph& g, const DistanceMatrix& d, OrientedEdge f,
                  const char* what) {
  if (d.size() != g.vertex_count()) {
    fail(ErrorCode::kParameterOutOfRange, "distance matrix does not match graph");
  }
  require_connected(d, what);
  if (!g.adjacent(f.alpha, f.beta)) {
    fail(ErrorCode::kEdgeNotFound,
         "(" + std::to_string(f.alpha) + "," + std::to_string(f.beta) + ")");
  }
}

EdgeCounts strict_counts(const Graph& g, const DistanceMatrix& d, OrientedEdge f) {
  const Edge base = f.canonical();
  EdgeCounts c;
  for (const Edge& e : g.edges()) {
    if (e == base) continue;
    const int da = vertex_edge_distance(d, f.alpha, e);
    const int db = vertex_edge_distance(d, f.beta, e);
    if (da < db) {
      ++c.m_alpha;
    } else if (db < da) {
      ++c.m_beta;
    } else {
      ++c.m_zero;
    }
  }
  return c;
}

}  // namespace

std::string_view to_string(Convention c) {
  return c == Convention::kStrict ? "strict" : "augmented";
}

std::optional<Convention> parse_convention(std::string_view text) {
  if (text == "strict") return Convention::kStrict;
  if (text == "augmented") return Convention::kAugmented;
  return std::nullopt;
}

std::size_t EdgePartition::cell_size(int to_alpha, int to_beta) const {
  auto it = cells_.find({to_alpha, to_beta});
  return it == cells_.end() ? 0 : it->second.size();
}

std::size_t EdgePartition::total() const {
  std::size_t sum = 0;
  for (const auto& [key, edges] : cells_) sum += edges.size();
  return sum;
}

VertexCounts vertex_counts(const Graph& g, const DistanceMatrix& d, OrientedEdge f) {
  check_inputs(g, d, f, "vertex_counts");
  VertexCounts c;
  const auto ra = d.row(f.alpha);
  const auto rb = d.row(f.beta);
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (ra[w] < rb[w]) {
      ++c.n_alpha;
    } else if (rb[w] < ra[w]) {
      ++c.n_beta;
    } else {
      ++c.n_zero;
    }
  }
  return c;
}

EdgeCounts edge_counts(const Graph& g, const DistanceMatrix& d, OrientedEdge f,
                       Convention conv) {
  check_inputs(g, d, f, "edge_counts");
  return under(conv, strict_counts(g, d, f));
}

EdgeBalanceCounts edge_balance(const Graph& g, const DistanceMatrix& d,
                               OrientedEdge f, Convention conv) {
  return {f, conv, vertex_counts(g, d, f), edge_counts(g, d, f, conv)};
}

EdgePartition distance_partition(const Graph& g, const DistanceMatrix& d,
                                 OrientedEdge f) {
  check_inputs(g, d, f, "distance_partition");
  const Edge base = f.canonical();
  std::map<EdgePartition::Key, std::vector<Edge>> cells;
  for (const Edge& e : g.edges()) {
    if (e == base) continue;
    cells[{vertex_edge_distance(d, f.alpha, e), vertex_edge_distance(d, f.beta, e)}]
        .push_back(e);
  }
  return {f, std::move(cells)};
}

std::vector<EdgeProfile> edge_profiles(const Graph& g, const DistanceMatrix& d) {
  if (d.size() != g.vertex_count()) {
    fail(ErrorCode::kParameterOutOfRange, "distance matrix does not match graph");
  }
  require_connected(d, "edge_profiles");
  const int n = g.vertex_count();
  std::vector<EdgeProfile> out;
  out.reserve(g.edges().size());
  for (const Edge& f : g.edges()) {
    EdgeProfile p;
    p.edge = f;
    const auto ra = d.row(f.u);
    const auto rb = d.row(f.v);
    for (int w = 0; w < n; ++w) {
      if (ra[w] < rb[w]) {
        ++p.vertex.n_alpha;
      } else if (rb[w] < ra[w]) {
        ++p.vertex.n_beta;
      } else {
        ++p.vertex.n_zero;
      }
    }
    p.nearer_alpha.assign(1, 0);
    p.nearer_beta.assign(1, 0);
    for (const Edge& e : g.edges()) {
      if (e == f) continue;
      const int da = std::min(ra[e.u], ra[e.v]);
      const int db = std::min(rb[e.u], rb[e.v]);
      if (da == db) {
        ++p.strict.m_zero;
        continue;
      }
      // |da - db| == 1 on a connected graph; the level is the larger one.
      const int level = std::max(da, db);
      if (level >= static_cast<int>(p.nearer_alpha.size())) {
        p.nearer_alpha.resize(level + 1, 0);
        p.nearer_beta.resize(level + 1, 0);
      }
      if (da < db) {
        ++p.strict.m_alpha;
        ++p.nearer_alpha[level];
      } else {
        ++p.strict.m_beta;
        ++p.nearer_beta[level];
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::int64_t szeged_index(const Graph& g, const DistanceMatrix& d) {
  std::int64_t sum = 0;
  for (const Edge& e : g.edges()) {
    const auto c = vertex_counts(g, d, oriented(e));
    sum += static_cast<std::int64_t>(c.n_alpha) * c.n_beta;
  }
  return sum;
}

std::int64_t szeged_index(const Graph& g) {
  return szeged_index(g, all_pairs_distances(g));
}

std::int64_t edge_szeged_index(const Graph& g, const DistanceMatrix& d,
                               Convention conv) {
  std::int64_t sum = 0;
  for (const Edge& e : g.edges()) {
    const auto c = edge_counts(g, d, oriented(e), conv);
    sum += static_cast<std::int64_t>(c.m_alpha) * c.m_beta;
  }
  return sum;
}

std::int64_t edge_szeged_index(const Graph& g, Convention conv) {
  return edge_szeged_index(g, all_pairs_distances(g), conv);
}

ClaimedEdgeSzeged claimed_edge_szeged(int n, int t) {
  if (n < 1 || t < 1 || n > 100 || t > 100) {
    fail(ErrorCode::kParameterOutOfRange, "claimed_edge_szeged needs 1 <= n, t <= 100");
  }
  const std::int64_t nn = n;
  const std::int64_t tt = t;
  const std::int64_t inner = tt * nn + tt + 1;
  return {tt * inner * inner * tt * nn * nn, (tt + 1) * (tt + 1)};
}

}  // namespace edgebal
