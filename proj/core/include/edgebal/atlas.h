#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgebal/balance.h"
#include "edgebal/classify.h"
#include "edgebal/graph.h"

namespace edgebal {

inline constexpr int kMaxAtlasVertices = 8;

// One canonical representative per isomorphism class of connected simple
// graphs on n vertices, 1 <= n <= kMaxAtlasVertices (ParameterOutOfRange
// otherwise). Ordered by (edge count, canonical form).
//
// Classes on n vertices are grown from those on n-1: every connected graph
// has a vertex whose removal leaves it connected, so attaching a new vertex
// to every nonempty neighbor set of every (n-1)-class reaches all classes.
std::vector<Graph> enumerate_connected(int n);

// Visits every class for n = 1..n_max in (n, edge count, canonical form)
// order.
void for_each_connected(int n_max, const std::function<void(const Graph&)>& visit);

struct CatalogEntry {
  std::string graph6;
  int vertex_count = 0;
  int edge_count = 0;
  ClassificationReport report;  // per_edge_counts left empty
};

using GraphPredicate = std::function<bool(const ClassificationReport&)>;

// Conjunction of comma-separated terms, each optionally negated with '!':
//   bipartite | diameter=K | gt_edb=T | gt_db=T | gt_sedb=T | gt_nedb |
//   gt_ndb | edb | db | true | false
// Throws ParseError.
GraphPredicate parse_predicate(std::string_view expr);

// Classifies every connected class with at least one edge on up to n_max
// vertices and keeps the ones the predicate accepts.
std::vector<CatalogEntry> search(const GraphPredicate& accept, int n_max,
                                 Convention conv);

// One JSON object per line with a fixed key order.
std::string catalog_line(const CatalogEntry& entry);
void write_catalog(std::ostream& out, std::span<const CatalogEntry> entries);

}  // namespace edgebal
