#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "edgebal/distance.h"
#include "edgebal/graph.h"

namespace edgebal {

// How the base edge f enters the edge-side counts.
//
// kStrict excludes f everywhere, so m_alpha + m_beta + m_zero = |E| - 1.
// kAugmented reports m_alpha + 1 and m_beta + 1 (f is unioned into both
// sides), so m_alpha + m_beta + m_zero = |E| + 1. m_zero is the same under
// both.
enum class Convention { kStrict, kAugmented };

std::string_view to_string(Convention c);
std::optional<Convention> parse_convention(std::string_view text);

struct VertexCounts {
  int n_alpha = 0;  // |{w : d(w, alpha) < d(w, beta)}|, alpha included
  int n_beta = 0;
  int n_zero = 0;

  VertexCounts swapped() const { return {n_beta, n_alpha, n_zero}; }
  friend bool operator==(const VertexCounts&, const VertexCounts&) = default;
};

struct EdgeCounts {
  int m_alpha = 0;
  int m_beta = 0;
  int m_zero = 0;

  EdgeCounts swapped() const { return {m_beta, m_alpha, m_zero}; }
  friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
};

// Converts STRICT counts to the requested convention.
inline EdgeCounts under(Convention c, EdgeCounts strict) {
  if (c == Convention::kAugmented) {
    ++strict.m_alpha;
    ++strict.m_beta;
  }
  return strict;
}

struct EdgeBalanceCounts {
  OrientedEdge edge;
  Convention convention = Convention::kStrict;
  VertexCounts vertex;
  EdgeCounts edges;

  EdgeBalanceCounts swapped() const {
    return {edge.reversed(), convention, vertex.swapped(), edges.swapped()};
  }
};

// Cells of the distance partition of E \ {f} induced by an oriented base edge,
// keyed by (d(g, alpha), d(g, beta)).
class EdgePartition {
 public:
  using Key = std::pair<int, int>;

  EdgePartition(OrientedEdge base, std::map<Key, std::vector<Edge>> cells)
      : base_(base), cells_(std::move(cells)) {}

  OrientedEdge base() const { return base_; }
  const std::map<Key, std::vector<Edge>>& cells() const { return cells_; }

  std::size_t cell_size(int to_alpha, int to_beta) const;
  // |cell(level-1, level)|: edges one step nearer alpha at that level.
  std::size_t nearer_alpha(int level) const { return cell_size(level - 1, level); }
  std::size_t nearer_beta(int level) const { return cell_size(level, level - 1); }
  std::size_t total() const;

 private:
  OrientedEdge base_;
  std::map<Key, std::vector<Edge>> cells_;
};

// All of the following require a connected graph (DisconnectedGraph) and an
// edge present in g (EdgeNotFound). d must be all_pairs_distances(g).

VertexCounts vertex_counts(const Graph& g, const DistanceMatrix& d, OrientedEdge f);
EdgeCounts edge_counts(const Graph& g, const DistanceMatrix& d, OrientedEdge f,
                       Convention conv);
EdgeBalanceCounts edge_balance(const Graph& g, const DistanceMatrix& d,
                               OrientedEdge f, Convention conv);
EdgePartition distance_partition(const Graph& g, const DistanceMatrix& d,
                                 OrientedEdge f);

// Sum over edges of n_alpha * n_beta.
std::int64_t szeged_index(const Graph& g, const DistanceMatrix& d);
std::int64_t szeged_index(const Graph& g);
// Sum over edges of m_alpha * m_beta under conv.
std::int64_t edge_szeged_index(const Graph& g, const DistanceMatrix& d,
                               Convention conv = Convention::kStrict);
std::int64_t edge_szeged_index(const Graph& g, Convention conv = Convention::kStrict);

// Per-edge summary in storage orientation (alpha = u, beta = v) used by the
// classifiers. Level arrays are indexed 1..levels(); index 0 is unused.
struct EdgeProfile {
  Edge edge;
  VertexCounts vertex;
  EdgeCounts strict;
  std::vector<int> nearer_alpha;  // |cell(i-1, i)|
  std::vector<int> nearer_beta;   // |cell(i, i-1)|

  int levels() const { return static_cast<int>(nearer_alpha.size()) - 1; }
  int nearer_alpha_at(int level) const {
    return level < static_cast<int>(nearer_alpha.size()) ? nearer_alpha[level] : 0;
  }
  int nearer_beta_at(int level) const {
    return level < static_cast<int>(nearer_beta.size()) ? nearer_beta[level] : 0;
  }
};

std::vector<EdgeProfile> edge_profiles(const Graph& g, const DistanceMatrix& d);

using Rational = boost::rational<std::int64_t>;

// The closed form t * (tn+t+1)^2 * t * n^2 / (t+1)^2 claimed for the
// edge-Szeged index of a bipartite generalized t-edge distance-balanced
// graph. Exact; the unreduced denominator is (t+1)^2.
struct ClaimedEdgeSzeged {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  Rational value() const { return {numerator, denominator}; }
};

// n, t >= 1 (ParameterOutOfRange otherwise).
ClaimedEdgeSzeged claimed_edge_szeged(int n, int t);

}  // namespace edgebal
