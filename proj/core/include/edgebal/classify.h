#pragma once

#include <optional>
#include <span>
#include <vector>

#include "edgebal/balance.h"
#include "edgebal/distance.h"
#include "edgebal/graph.h"

namespace edgebal {

// A set of ratios t >= 1. `all` marks the vacuous case where every t
// qualifies (no edges, or every edge has counts (0, 0) under STRICT, or no
// partition level to test).
struct TValues {
  std::vector<int> values;  // ascending, ignored when all is set
  bool all = false;

  bool contains(int t) const;
  bool empty() const { return !all && values.empty(); }
  friend bool operator==(const TValues&, const TValues&) = default;
};

// Nicely balanced witness: every edge's unordered count pair is
// {gamma, t * gamma}.
struct NicelyBalanced {
  int t = 1;
  int gamma = 0;
  friend bool operator==(const NicelyBalanced&, const NicelyBalanced&) = default;
};

// a = t*b or b = t*a. Handles zero counts: (0,0) fits every t, (0,k>0) none.
inline bool in_ratio(int a, int b, int t) { return a == t * b || b == t * a; }

// Graph-level entry points. All throw DisconnectedGraph and take t >= 1
// (ParameterOutOfRange otherwise).
bool is_gt_db(const Graph& g, const DistanceMatrix& d, int t);
TValues gt_db_values(const Graph& g, const DistanceMatrix& d);
bool is_gt_edb(const Graph& g, const DistanceMatrix& d, int t, Convention conv);
TValues gt_edb_values(const Graph& g, const DistanceMatrix& d, Convention conv);
std::optional<NicelyBalanced> gt_nedb(const Graph& g, const DistanceMatrix& d,
                                      Convention conv);
// Vertex-side analogue of gt_nedb.
std::optional<NicelyBalanced> gt_ndb(const Graph& g, const DistanceMatrix& d);
// For every edge there is one orientation with
// |cell(i-1,i)| = t * |cell(i,i-1)| + (t-1) for all i in [1, diameter-1].
bool is_gt_sedb(const Graph& g, const DistanceMatrix& d, int t);
TValues gt_sedb_values(const Graph& g, const DistanceMatrix& d);
// Plain strong balance: |cell(i-1,i)| = |cell(i,i-1)| at every level i >= 1,
// including level diameter.
bool is_sedb(const Graph& g, const DistanceMatrix& d);

// Same predicates over precomputed profiles, for callers that classify many
// properties of one graph.
bool is_gt_db(std::span<const EdgeProfile> edges, int t);
TValues gt_db_values(std::span<const EdgeProfile> edges);
bool is_gt_edb(std::span<const EdgeProfile> edges, int t, Convention conv);
TValues gt_edb_values(std::span<const EdgeProfile> edges, Convention conv);
std::optional<NicelyBalanced> gt_nedb(std::span<const EdgeProfile> edges,
                                      Convention conv);
std::optional<NicelyBalanced> gt_ndb(std::span<const EdgeProfile> edges);
bool is_gt_sedb(std::span<const EdgeProfile> edges, int diameter, int t);
TValues gt_sedb_values(std::span<const EdgeProfile> edges, int diameter);
bool is_sedb(std::span<const EdgeProfile> edges);

// Every edge has one orientation in which both the edge counts and the
// vertex counts stand in ratio t.
bool is_gt_edb_db_aligned(std::span<const EdgeProfile> edges, int t, Convention conv);

struct ClassificationReport {
  Convention convention = Convention::kAugmented;
  int vertex_count = 0;
  int edge_count = 0;
  int diameter = 0;
  bool bipartite = false;
  bool db = false;   // 1 in gt_db_values
  bool edb = false;  // 1 in gt_edb_values
  TValues gt_db_values;
  TValues gt_edb_values;
  TValues gt_sedb_values;
  std::optional<NicelyBalanced> gt_nedb;
  std::optional<NicelyBalanced> gt_ndb;
  // Storage orientation, counts under `convention`.
  std::vector<EdgeBalanceCounts> per_edge_counts;
};

ClassificationReport full_report(const Graph& g, const DistanceMatrix& d,
                                 Convention conv);
ClassificationReport full_report(const Graph& g, Convention conv);

}  // namespace edgebal
