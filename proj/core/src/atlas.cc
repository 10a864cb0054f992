#include "edgebal/atlas.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <ostream>
#include <set>
#include <string>
#include <utility>

#include "canonical_core.h"
#include "edgebal/errors.h"
#include "edgebal/graph6.h"
#include "edgebal/report_json.h"

namespace edgebal {
namespace {

using Key = std::uint64_t;

// (edge count, key) orders classes by edge count, then canonical bit string.
using ClassSet = std::set<std::pair<int, Key>>;

ClassSet grow(const ClassSet& smaller, int n) {
  ClassSet out;
  const int prev = n - 1;
  for (const auto& [m, key] : smaller) {
    const Graph base = detail::graph_from_key(key, prev);
    const detail::AdjMasks base_adj = detail::masks_of(base);
    for (std::uint32_t hood = 1; hood < (1u << prev); ++hood) {
      detail::AdjMasks adj = base_adj;
      adj[prev] = hood;
      for (int v = 0; v < prev; ++v) {
        if (hood >> v & 1u) adj[v] |= 1u << prev;
      }
      const auto r = detail::canonicalize(adj, n);
      out.emplace(m + std::popcount(hood), r.key);
    }
  }
  return out;
}

ClassSet classes(int n) {
  ClassSet level{{0, Key{0}}};
  for (int k = 2; k <= n; ++k) level = grow(level, k);
  return level;
}

void check_n(int n) {
  if (n < 1 || n > kMaxAtlasVertices) {
    fail(ErrorCode::kParameterOutOfRange,
         "enumeration needs 1 <= n <= " + std::to_string(kMaxAtlasVertices) + ", got " +
             std::to_string(n));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view text, std::string_view term, int min_value) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < min_value) {
    fail(ErrorCode::kParseError, "bad integer in predicate term '" + std::string(term) + "'");
  }
  return value;
}

GraphPredicate parse_term(std::string_view term) {
  bool negate = false;
  if (!term.empty() && term.front() == '!') {
    negate = true;
    term = trim(term.substr(1));
  }
  GraphPredicate base;
  const auto eq = term.find('=');
  const std::string_view name = trim(term.substr(0, eq));
  if (eq == std::string_view::npos) {
    if (name == "bipartite") {
      base = [](const ClassificationReport& r) { return r.bipartite; };
    } else if (name == "gt_nedb") {
      base = [](const ClassificationReport& r) { return r.gt_nedb.has_value(); };
    } else if (name == "gt_ndb") {
      base = [](const ClassificationReport& r) { return r.gt_ndb.has_value(); };
    } else if (name == "edb") {
      base = [](const ClassificationReport& r) { return r.edb; };
    } else if (name == "db") {
      base = [](const ClassificationReport& r) { return r.db; };
    } else if (name == "true") {
      base = [](const ClassificationReport&) { return true; };
    } else if (name == "false") {
      base = [](const ClassificationReport&) { return false; };
    }
  } else {
    // Diameters start at 0, ratios at 1.
    const int k = parse_int(trim(term.substr(eq + 1)), term, name == "diameter" ? 0 : 1);
    if (name == "diameter") {
      base = [k](const ClassificationReport& r) { return r.diameter == k; };
    } else if (name == "gt_edb") {
      base = [k](const ClassificationReport& r) { return r.gt_edb_values.contains(k); };
    } else if (name == "gt_db") {
      base = [k](const ClassificationReport& r) { return r.gt_db_values.contains(k); };
    } else if (name == "gt_sedb") {
      base = [k](const ClassificationReport& r) { return r.gt_sedb_values.contains(k); };
    }
  }
  if (!base) fail(ErrorCode::kParseError, "unknown predicate term '" + std::string(term) + "'");
  if (!negate) return base;
  return [base](const ClassificationReport& r) { return !base(r); };
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) {
  check_n(n);
  std::vector<Graph> out;
  for (const auto& [m, key] : classes(n)) out.push_back(detail::graph_from_key(key, n));
  return out;
}

void for_each_connected(int n_max, const std::function<void(const Graph&)>& visit) {
  check_n(n_max);
  ClassSet level{{0, Key{0}}};
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) level = grow(level, n);
    for (const auto& [m, key] : level) visit(detail::graph_from_key(key, n));
  }
}

GraphPredicate parse_predicate(std::string_view expr) {
  std::vector<GraphPredicate> terms;
  while (true) {
    const auto comma = expr.find(',');
    const std::string_view term = trim(expr.substr(0, comma));
    if (term.empty()) fail(ErrorCode::kParseError, "empty predicate term");
    terms.push_back(parse_term(term));
    if (comma == std::string_view::npos) break;
    expr.remove_prefix(comma + 1);
  }
  return [terms = std::move(terms)](const ClassificationReport& r) {
    return std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return t(r); });
  };
}

std::vector<CatalogEntry> search(const GraphPredicate& accept, int n_max,
                                 Convention conv) {
  std::vector<CatalogEntry> out;
  for_each_connected(n_max, [&](const Graph& g) {
    if (g.edge_count() == 0) return;
    ClassificationReport r = full_report(g, conv);
    if (!accept(r)) return;
    r.per_edge_counts.clear();
    out.push_back({to_graph6(g), g.vertex_count(), g.edge_count(), std::move(r)});
  });
  return out;
}

std::string catalog_line(const CatalogEntry& entry) {
  return catalog_json(entry).dump();
}

void write_catalog(std::ostream& out, std::span<const CatalogEntry> entries) {
  for (const auto& e : entries) out << catalog_line(e) << '\n';
}

}  // namespace edgebal
