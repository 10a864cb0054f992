#include "edgebal/verifier.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

#include "edgebal/atlas.h"
#include "edgebal/canonical.h"
#include "edgebal/classify.h"
#include "edgebal/distance.h"
#include "edgebal/errors.h"
#include "edgebal/generators.h"
#include "edgebal/graph6.h"
#include "edgebal/products.h"
#include "edgebal/traversal.h"

namespace edgebal {
namespace {

constexpr Convention kBoth[] = {Convention::kStrict, Convention::kAugmented};

// A graph with everything the checks read from it.
struct Analyzed {
  std::string name;
  Graph graph;
  std::string graph6;
  DistanceMatrix dist;
  std::vector<EdgeProfile> profiles;
  int diameter = 0;
  bool bipartite = false;

  Analyzed(std::string label, Graph g)
      : name(std::move(label)),
        graph(std::move(g)),
        graph6(to_graph6(graph)),
        dist(graph),
        profiles(edge_profiles(graph, dist)),
        diameter(edgebal::diameter(dist)),
        bipartite(is_bipartite(graph).bipartite) {}

  const EdgeProfile& profile(Vertex a, Vertex b) const {
    return profiles[*graph.edge_index(a, b)];
  }
  // Counts for the edge oriented (a, b) under conv.
  EdgeCounts edge_counts(Vertex a, Vertex b, Convention conv) const {
    const EdgeCounts c = under(conv, profile(a, b).strict);
    return a < b ? c : c.swapped();
  }
  VertexCounts vertex_counts(Vertex a, Vertex b) const {
    const VertexCounts c = profile(a, b).vertex;
    return a < b ? c : c.swapped();
  }
};

struct Context {
  const VerifyConfig& config;
  std::vector<Analyzed> atlas;  // connected classes with >= 1 edge
  std::vector<Analyzed> products_corpus;
};

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string kntn_name(int n, int t) {
  return "complete_bipartite(" + std::to_string(n) + "," + std::to_string(t * n) + ")";
}

Json pair_json(int a, int b) { return Json::array({a, b}); }

class OutcomeBuilder {
 public:
  OutcomeBuilder(std::string label, std::optional<Convention> conv, Verdict on_failure,
                 int cap, bool complete = false)
      : on_failure_(on_failure), cap_(cap) {
    out_.label = std::move(label);
    out_.convention = conv;
    out_.complete_records = complete;
  }

  void instance() { ++out_.instances; }
  void compare(int k = 1) { out_.comparisons += k; }

  void add(Record r) {
    if (!r.holds) ++out_.failures;
    if (out_.complete_records || (!r.holds && stored_failures_ < cap_)) {
      if (!r.holds) ++stored_failures_;
      out_.records.push_back(std::move(r));
    }
  }

  Outcome finish() {
    out_.verdict = out_.failures > 0 ? on_failure_ : Verdict::kPass;
    return std::move(out_);
  }

 private:
  Outcome out_;
  Verdict on_failure_;
  int cap_;
  int stored_failures_ = 0;
};

Record record(const std::string& instance, const std::string& graph6,
              std::optional<OrientedEdge> edge = std::nullopt) {
  Record r;
  r.instance = instance;
  r.graph6 = graph6;
  r.edge = edge;
  return r;
}

std::string conv_label(Convention c) { return std::string(to_string(c)); }

// ---------------------------------------------------------------------------

CheckResult check_c1(const Context& ctx) {
  const auto& cfg = ctx.config;
  OutcomeBuilder ob("augmented", Convention::kAugmented, Verdict::kCounterexample,
                    cfg.witness_cap, true);
  for (int n = 1; n <= cfg.kntn_n_max; ++n) {
    for (int t = cfg.kntn_t_min; t <= cfg.kntn_t_max; ++t) {
      const Analyzed g(kntn_name(n, t), complete_bipartite(n, t * n));
      ob.instance();
      const TValues values = gt_edb_values(g.profiles, Convention::kAugmented);
      bool counts_ok = true;
      Json mismatch = nullptr;
      for (const auto& p : g.profiles) {
        ob.compare();
        // Storage orientation puts the part of size n (degree tn) first.
        const EdgeCounts c = under(Convention::kAugmented, p.strict);
        if (c.m_alpha != t * n || c.m_beta != n) {
          counts_ok = false;
          if (mismatch.is_null()) {
            mismatch = {{"edge", pair_json(p.edge.u, p.edge.v)},
                        {"counts", pair_json(c.m_alpha, c.m_beta)}};
          }
        }
      }
      Record r = record(g.name, g.graph6);
      const EdgeCounts first = under(Convention::kAugmented, g.profiles.front().strict);
      r.values = {{"n", n},
                  {"t", t},
                  {"expected_counts", pair_json(t * n, n)},
                  {"edge_counts", pair_json(first.m_alpha, first.m_beta)},
                  {"all_edges_match", counts_ok},
                  {"gt_edb_values", to_json(values)}};
      if (!mismatch.is_null()) r.values["first_mismatch"] = mismatch;
      r.holds = counts_ok && values.contains(t);
      ob.add(std::move(r));
    }
  }
  CheckResult res;
  res.claim = "K_{n,tn} is generalized t-edge distance-balanced with per-edge counts (tn, n)";
  res.instance_set = "K_{n,tn}, n in [1," + std::to_string(cfg.kntn_n_max) + "], t in [" +
                     std::to_string(cfg.kntn_t_min) + "," + std::to_string(cfg.kntn_t_max) + "]";
  res.convention = "augmented";
  res.outcomes.push_back(ob.finish());
  return res;
}

CheckResult check_c2(const Context& ctx) {
  OutcomeBuilder ob("augmented", Convention::kAugmented, Verdict::kCounterexample,
                    ctx.config.witness_cap, true);
  for (const auto& g : ctx.atlas) {
    if (!g.bipartite || g.diameter != 2) continue;
    const TValues values = gt_edb_values(g.profiles, Convention::kAugmented);
    if (values.empty()) continue;
    ob.instance();
    for (int t : values.values) {
      Record r = record(g.graph6, g.graph6);
      bool ok = true;
      for (const auto& p : g.profiles) {
        ob.compare();
        const EdgeCounts c = under(Convention::kAugmented, p.strict);
        const int du = g.graph.degree(p.edge.u);
        const int dv = g.graph.degree(p.edge.v);
        const bool forward = c.m_alpha == t * c.m_beta && du == t * dv;
        const bool backward = c.m_beta == t * c.m_alpha && dv == t * du;
        if (!forward && !backward && ok) {
          ok = false;
          r.edge = oriented(p.edge);
          r.values["failing_edge_counts"] = pair_json(c.m_alpha, c.m_beta);
          r.values["failing_edge_degrees"] = pair_json(du, dv);
        }
      }
      r.values["t"] = t;
      r.values["n"] = g.graph.vertex_count();
      r.values["m"] = g.graph.edge_count();
      r.holds = ok;
      ob.add(std::move(r));
    }
  }
  CheckResult res;
  res.claim = "in a bipartite diameter-2 generalized t-edge distance-balanced graph every "
              "edge has deg(alpha) = t deg(beta) in the orientation where m_alpha = t m_beta";
  res.instance_set = "connected bipartite diameter-2 graphs on <= " +
                     std::to_string(ctx.config.atlas_n_max) + " vertices";
  res.convention = "augmented";
  res.outcomes.push_back(ob.finish());
  return res;
}

CheckResult check_c3(const Context& ctx) {
  OutcomeBuilder ob("augmented", Convention::kAugmented, Verdict::kCounterexample,
                    ctx.config.witness_cap, true);
  for (const auto& g : ctx.atlas) {
    if (!g.bipartite || g.diameter != 2) continue;
    ob.instance();
    const TValues values = gt_edb_values(g.profiles, Convention::kAugmented);
    const int n = g.graph.vertex_count();
    Record r = record(g.graph6, g.graph6);
    r.values["n"] = n;
    r.values["m"] = g.graph.edge_count();
    r.values["gt_edb_values"] = to_json(values);
    Json matched = Json::array();
    bool ok = true;
    for (int t : values.values) {
      if (t < 2) continue;
      ob.compare();
      std::string found;
      if (n % (t + 1) == 0) {
        const int part = n / (t + 1);
        if (are_isomorphic(g.graph, complete_bipartite(part, t * part))) {
          found = kntn_name(part, t);
        }
      }
      if (found.empty()) {
        ok = false;
        matched.push_back({{"t", t}, {"isomorphic_to", nullptr}});
      } else {
        matched.push_back({{"t", t}, {"isomorphic_to", found}});
      }
    }
    r.values["generalized_matches"] = std::move(matched);
    r.holds = ok;
    ob.add(std::move(r));
  }
  CheckResult res;
  res.claim = "a bipartite diameter-2 generalized t-edge distance-balanced graph (t >= 2) "
              "is isomorphic to K_{n,tn}";
  res.instance_set = "all connected bipartite diameter-2 graphs on <= " +
                     std::to_string(ctx.config.atlas_n_max) + " vertices";
  res.convention = "augmented";
  res.outcomes.push_back(ob.finish());
  return res;
}

CheckResult check_c4(const Context& ctx) {
  const auto& cfg = ctx.config;
  CheckResult res;
  for (Convention conv : kBoth) {
    OutcomeBuilder ob(conv_label(conv), conv, Verdict::kDiscrepancy, cfg.witness_cap, true);
    for (int n = 1; n <= cfg.kntn_n_max; ++n) {
      for (int t = cfg.formula_t_min; t <= cfg.kntn_t_max; ++t) {
        const Graph g = complete_bipartite(n, t * n);
        const DistanceMatrix d(g);
        ob.instance();
        ob.compare();
        const std::int64_t computed = edge_szeged_index(g, d, conv);
        const ClaimedEdgeSzeged claimed = claimed_edge_szeged(n, t);
        const Rational diff = Rational(computed) - claimed.value();
        Record r = record(kntn_name(n, t), to_graph6(g));
        r.values["n"] = n;
        r.values["t"] = t;
        r.values["computed"] = computed;
        r.values["claimed"] = rational_text(claimed.value());
        r.values["claimed_numerator"] = claimed.numerator;
        r.values["claimed_denominator"] = claimed.denominator;
        r.values["claimed_is_integer"] = claimed.value().denominator() == 1;
        r.values["computed_minus_claimed"] = rational_text(diff);
        r.holds = diff.numerator() == 0;
        ob.add(std::move(r));
      }
    }
    res.outcomes.push_back(ob.finish());
  }
  res.claim = "the edge-Szeged index of a bipartite generalized t-edge distance-balanced "
              "graph equals t(tn+t+1)^2 tn^2 / (t+1)^2";
  res.instance_set = "K_{n,tn}, n in [1," + std::to_string(cfg.kntn_n_max) + "], t in [" +
                     std::to_string(cfg.formula_t_min) + "," +
                     std::to_string(cfg.kntn_t_max) + "]";
  res.convention = "both";
  return res;
}

// Decodes product vertex id p into its (a, b) coordinates.
std::pair<Vertex, Vertex> coords(Vertex p, int nb) { return {p / nb, p % nb}; }

CheckResult check_c5(const Context& ctx) {
  const auto& corpus = ctx.products_corpus;
  OutcomeBuilder ob("strict", Convention::kStrict, Verdict::kDiscrepancy,
                    ctx.config.witness_cap);
  for (const auto& a : corpus) {
    for (const auto& b : corpus) {
      const std::string name = "cartesian(" + a.name + "," + b.name + ")";
      const Analyzed p(name, cartesian_product(a.graph, b.graph));
      ob.instance();
      const int nb = b.graph.vertex_count();
      for (const auto& prof : p.profiles) {
        const auto [a1, b1] = coords(prof.edge.u, nb);
        const auto [a2, b2] = coords(prof.edge.v, nb);
        const bool a_edge = b1 == b2;
        // Factor edge and the sizes of the other factor.
        const Analyzed& factor = a_edge ? a : b;
        const Analyzed& other = a_edge ? b : a;
        const Vertex x = a_edge ? a1 : b1;
        const Vertex y = a_edge ? a2 : b2;
        for (int side = 0; side < 2; ++side) {
          ob.compare();
          const Vertex from = side == 0 ? x : y;
          const Vertex to = side == 0 ? y : x;
          const EdgeCounts fc = factor.edge_counts(from, to, Convention::kStrict);
          const VertexCounts fv = factor.vertex_counts(from, to);
          const std::int64_t formula =
              static_cast<std::int64_t>(fc.m_alpha) * other.graph.vertex_count() +
              static_cast<std::int64_t>(fv.n_alpha) * other.graph.edge_count();
          const int brute = side == 0 ? prof.strict.m_alpha : prof.strict.m_beta;
          if (brute == formula) continue;
          Record r = record(name, p.graph6,
                            side == 0 ? oriented(prof.edge) : oriented(prof.edge).reversed());
          r.values = {{"factor_edge_in", a_edge ? "A" : "B"},
                      {"factor_edge", pair_json(from, to)},
                      {"brute_force", brute},
                      {"formula", formula},
                      {"factor_m", fc.m_alpha},
                      {"factor_n", fv.n_alpha},
                      {"other_vertices", other.graph.vertex_count()},
                      {"other_edges", other.graph.edge_count()}};
          r.holds = false;
          ob.add(std::move(r));
        }
      }
    }
  }
  CheckResult res;
  res.claim = "for a product edge (a1,b)(a2,b) of A x B (Cartesian), "
              "m_(a1,b) = m_a1(a1a2) |V(B)| + n_a1(a1a2) |E(B)|, likewise for a2 and for "
              "edges along B";
  res.instance_set = "all ordered pairs of the product corpus (" +
                     std::to_string(corpus.size() * corpus.size()) + " Cartesian products)";
  res.convention = "strict";
  res.outcomes.push_back(ob.finish());
  return res;
}

CheckResult check_c6(const Context& ctx) {
  const auto& corpus = ctx.products_corpus;
  const auto& cfg = ctx.config;
  CheckResult res;
  for (Convention conv : kBoth) {
    for (bool aligned : {false, true}) {
      OutcomeBuilder ob(conv_label(conv) + (aligned ? "/aligned_orientation" : "/as_stated"),
                        conv, Verdict::kCounterexample, cfg.witness_cap);
      for (const auto& a : corpus) {
        for (const auto& b : corpus) {
          const std::string name = "cartesian(" + a.name + "," + b.name + ")";
          const Analyzed p(name, cartesian_product(a.graph, b.graph));
          ob.instance();
          for (int t = 1; t <= cfg.product_t_max; ++t) {
            ob.compare(2);
            const bool lhs = is_gt_edb(p.profiles, t, conv);
            auto factor_ok = [&](const Analyzed& f) {
              if (aligned) return is_gt_edb_db_aligned(f.profiles, t, conv);
              return is_gt_edb(f.profiles, t, conv) && is_gt_db(f.profiles, t);
            };
            const bool a_ok = factor_ok(a);
            const bool b_ok = factor_ok(b);
            const bool rhs = a_ok && b_ok;
            if (lhs == rhs) continue;
            Record r = record(name, p.graph6);
            r.values = {{"t", t},
                        {"failed_direction", rhs ? "factors_imply_product" : "product_implies_factors"},
                        {"product_gt_edb", lhs},
                        {"A_condition", a_ok},
                        {"B_condition", b_ok},
                        {"A_graph6", a.graph6},
                        {"B_graph6", b.graph6}};
            r.holds = false;
            ob.add(std::move(r));
          }
        }
      }
      res.outcomes.push_back(ob.finish());
    }
  }
  res.claim = "A x B (Cartesian) is generalized t-edge distance-balanced iff A and B are both "
              "generalized t-edge and t-vertex distance-balanced";
  res.instance_set = "all ordered pairs of the product corpus, t in [1," +
                     std::to_string(cfg.product_t_max) + "]";
  res.convention = "both";
  return res;
}

CheckResult check_c7(const Context& ctx) {
  const auto& cfg = ctx.config;
  std::vector<Analyzed> bases;
  for (const auto& spec : cfg.edb_corpus) bases.emplace_back(spec, generate_from_spec(spec));
  std::vector<std::pair<std::string, Graph>> edged;
  for (const auto& spec : cfg.edged_factors) edged.emplace_back(spec, generate_from_spec(spec));

  CheckResult res;
  for (Convention conv : kBoth) {
    OutcomeBuilder fwd(conv_label(conv) + "/edgeless_factor", conv, Verdict::kCounterexample,
                       cfg.witness_cap);
    for (const auto& a : bases) {
      const TValues values = gt_edb_values(a.profiles, conv);
      if (values.empty()) continue;
      std::vector<int> ts = values.values;
      if (values.all) {
        ts.clear();
        for (int t = 1; t <= cfg.product_t_max; ++t) ts.push_back(t);
      }
      for (int k = 1; k <= cfg.empty_factor_max; ++k) {
        const std::string name =
            "lexicographic(" + a.name + ",empty(" + std::to_string(k) + "))";
        const Analyzed p(name, lexicographic_product(a.graph, empty(k)));
        fwd.instance();
        Record r = record(name, p.graph6);
        r.values["A_gt_edb_values"] = to_json(values);
        Json missing = Json::array();
        for (int t : ts) {
          fwd.compare();
          if (!is_gt_edb(p.profiles, t, conv)) missing.push_back(t);
        }
        bool scaled = true;
        for (const Edge& e : a.graph.edges()) {
          const EdgeCounts base = a.edge_counts(e.u, e.v, conv);
          for (Vertex b1 = 0; b1 < k && scaled; ++b1) {
            for (Vertex b2 = 0; b2 < k && scaled; ++b2) {
              fwd.compare();
              const Vertex p1 = e.u * k + b1;
              const Vertex p2 = e.v * k + b2;
              const EdgeCounts pc = p.edge_counts(p1, p2, conv);
              if (pc.m_alpha != k * base.m_alpha || pc.m_beta != k * base.m_beta) {
                scaled = false;
                r.edge = OrientedEdge{p1, p2};
                r.values["factor_edge"] = pair_json(e.u, e.v);
                r.values["factor_counts"] = pair_json(base.m_alpha, base.m_beta);
                r.values["product_counts"] = pair_json(pc.m_alpha, pc.m_beta);
                r.values["expected_product_counts"] =
                    pair_json(k * base.m_alpha, k * base.m_beta);
              }
            }
          }
          if (!scaled) break;
        }
        r.values["t_missing_in_product"] = std::move(missing);
        r.values["counts_scale_by_factor_order"] = scaled;
        r.holds = scaled && r.values["t_missing_in_product"].empty();
        fwd.add(std::move(r));
      }
    }
    res.outcomes.push_back(fwd.finish());

    OutcomeBuilder rev(conv_label(conv) + "/edged_factor", conv, Verdict::kCounterexample,
                       cfg.witness_cap);
    for (const auto& a : bases) {
      for (const auto& [bname, bgraph] : edged) {
        const std::string name = "lexicographic(" + a.name + "," + bname + ")";
        const Analyzed p(name, lexicographic_product(a.graph, bgraph));
        rev.instance();
        rev.compare();
        const TValues values = gt_edb_values(p.profiles, conv);
        const bool generalized =
            values.all || std::any_of(values.values.begin(), values.values.end(),
                                      [](int t) { return t >= 2; });
        if (!generalized) continue;
        Record r = record(name, p.graph6);
        r.values = {{"product_gt_edb_values", to_json(values)},
                    {"B_edges", bgraph.edge_count()}};
        r.holds = false;
        rev.add(std::move(r));
      }
    }
    res.outcomes.push_back(rev.finish());
  }
  res.claim = "A[B] is generalized t-edge distance-balanced iff A is and B is edgeless; "
              "with B edgeless the product's edge counts are |V(B)| times those of A";
  res.instance_set = "A from the balanced corpus; B = empty(k), k in [1," +
                     std::to_string(cfg.empty_factor_max) +
                     "], or B from the edged factors (t >= 2 for the converse)";
  res.convention = "both";
  return res;
}

CheckResult check_c8(const Context& ctx) {
  CheckResult res;
  for (Convention conv : kBoth) {
    OutcomeBuilder ob(conv_label(conv), conv, Verdict::kDiscrepancy, ctx.config.witness_cap);
    for (const auto& g : ctx.atlas) {
      const auto nb = gt_nedb(g.profiles, conv);
      if (!nb) continue;
      ob.instance();
      const int m = g.graph.edge_count();
      // The accounting identity of the active convention.
      const int expected = conv == Convention::kStrict ? m - (nb->t + 1) * nb->gamma - 1
                                                       : m + 1 - (nb->t + 1) * nb->gamma;
      for (const auto& p : g.profiles) {
        ob.compare();
        if (p.strict.m_zero == expected) continue;
        Record r = record(g.graph6, g.graph6, oriented(p.edge));
        r.values = {{"t", nb->t},
                    {"gamma_prime", nb->gamma},
                    {"edges", m},
                    {"m_zero", p.strict.m_zero},
                    {"expected", expected}};
        r.holds = false;
        ob.add(std::move(r));
      }
    }
    res.outcomes.push_back(ob.finish());
  }
  res.claim = "in a generalized t-nicely edge distance-balanced graph every edge has "
              "m_0 = |E| - (t+1) gamma' - 1 (strict accounting; |E| + 1 - (t+1) gamma' "
              "when the base edge is counted on both sides)";
  res.instance_set = "nicely balanced connected graphs on <= " +
                     std::to_string(ctx.config.atlas_n_max) + " vertices";
  res.convention = "both";
  return res;
}

CheckResult check_c9(const Context& ctx) {
  CheckResult res;
  for (Convention conv : kBoth) {
    OutcomeBuilder ob(conv_label(conv), conv, Verdict::kCounterexample, ctx.config.witness_cap);
    for (const auto& g : ctx.atlas) {
      const auto nb = gt_nedb(g.profiles, conv);
      if (!nb) continue;
      ob.instance();
      ob.compare();
      if (g.diameter - 1 <= nb->t * nb->gamma) continue;
      Record r = record(g.graph6, g.graph6);
      r.values = {{"diameter", g.diameter}, {"t", nb->t}, {"gamma_prime", nb->gamma}};
      r.holds = false;
      ob.add(std::move(r));
    }
    res.outcomes.push_back(ob.finish());
  }
  res.claim = "a connected generalized t-nicely edge distance-balanced graph of diameter d "
              "has d - 1 <= t gamma'";
  res.instance_set = "nicely balanced connected graphs on <= " +
                     std::to_string(ctx.config.atlas_n_max) + " vertices";
  res.convention = "both";
  return res;
}

CheckResult check_c10(const Context& ctx) {
  const auto& corpus = ctx.products_corpus;
  CheckResult res;
  for (Convention conv : kBoth) {
    OutcomeBuilder ob(conv_label(conv), conv, Verdict::kCounterexample, ctx.config.witness_cap,
                      true);
    for (const auto& a : corpus) {
      for (const auto& b : corpus) {
        const std::string name = "cartesian(" + a.name + "," + b.name + ")";
        const Analyzed p(name, cartesian_product(a.graph, b.graph));
        ob.instance();
        ob.compare();
        const auto prod = gt_nedb(p.profiles, conv);
        const auto ea = gt_nedb(a.profiles, conv);
        const auto eb = gt_nedb(b.profiles, conv);
        const auto va = gt_ndb(a.profiles);
        const auto vb = gt_ndb(b.profiles);
        bool rhs = ea && eb && va && vb;
        Json balance = nullptr;
        if (rhs) {
          const std::int64_t left =
              static_cast<std::int64_t>(b.graph.vertex_count()) * ea->gamma +
              static_cast<std::int64_t>(b.graph.edge_count()) * va->gamma;
          const std::int64_t right =
              static_cast<std::int64_t>(a.graph.vertex_count()) * eb->gamma +
              static_cast<std::int64_t>(a.graph.edge_count()) * vb->gamma;
          balance = pair_json(static_cast<int>(left), static_cast<int>(right));
          rhs = left == right;
        }
        Record r = record(name, p.graph6);
        r.values = {{"product_gt_nedb", to_json(prod, "gamma_prime")},
                    {"A_gt_nedb", to_json(ea, "gamma_prime")},
                    {"B_gt_nedb", to_json(eb, "gamma_prime")},
                    {"A_gt_ndb", to_json(va, "gamma")},
                    {"B_gt_ndb", to_json(vb, "gamma")},
                    {"balance_sides", balance},
                    {"factors_condition", rhs}};
        r.holds = prod.has_value() == rhs;
        ob.add(std::move(r));
      }
    }
    res.outcomes.push_back(ob.finish());
  }
  res.claim = "A x B (Cartesian) is generalized t-nicely edge distance-balanced iff A and B "
              "are, and |V(B)| gamma'_A + |E(B)| gamma_A = |V(A)| gamma'_B + |E(A)| gamma_B";
  res.instance_set = "all ordered pairs of the product corpus";
  res.convention = "both";
  return res;
}

CheckResult check_c11(const Context& ctx) {
  const auto& cfg = ctx.config;
  OutcomeBuilder ob("partition", std::nullopt, Verdict::kCounterexample, cfg.witness_cap, true);
  for (int n = 1; n <= cfg.kntn_n_max; ++n) {
    for (int t = cfg.kntn_t_min; t <= cfg.kntn_t_max; ++t) {
      const Analyzed g(kntn_name(n, t), complete_bipartite(n, t * n));
      ob.instance();
      ob.compare(g.graph.edge_count());
      const TValues values = gt_sedb_values(g.profiles, g.diameter);
      const auto& first = g.profiles.front();
      Record r = record(g.name, g.graph6, oriented(first.edge));
      r.values = {{"n", n},
                  {"t", t},
                  {"diameter", g.diameter},
                  {"level1_cells", pair_json(first.nearer_alpha_at(1), first.nearer_beta_at(1))},
                  {"gt_sedb_values", to_json(values)}};
      r.holds = values.contains(t);
      ob.add(std::move(r));
    }
  }
  CheckResult res;
  res.claim = "K_{n,tn} is generalized t-strongly edge distance-balanced";
  res.instance_set = "K_{n,tn}, n in [1," + std::to_string(cfg.kntn_n_max) + "], t in [" +
                     std::to_string(cfg.kntn_t_min) + "," + std::to_string(cfg.kntn_t_max) + "]";
  res.convention = "strict";
  res.outcomes.push_back(ob.finish());
  return res;
}

CheckResult check_c12(const Context& ctx) {
  CheckResult res;
  OutcomeBuilder d2("augmented/diameter_2", Convention::kAugmented, Verdict::kCounterexample,
                    ctx.config.witness_cap);
  OutcomeBuilder t1("strict/t_1", Convention::kStrict, Verdict::kCounterexample,
                    ctx.config.witness_cap);
  for (const auto& g : ctx.atlas) {
    const TValues sedb = gt_sedb_values(g.profiles, g.diameter);
    // The diameter-2 statement is made for t >= 2.
    std::vector<int> scoped;
    for (int t : sedb.values) {
      if (t >= 2) scoped.push_back(t);
    }
    if (g.diameter == 2 && !scoped.empty()) {
      d2.instance();
      Json missing = Json::array();
      for (int t : scoped) {
        d2.compare();
        if (!is_gt_edb(g.profiles, t, Convention::kAugmented)) missing.push_back(t);
      }
      if (!missing.empty()) {
        Record r = record(g.graph6, g.graph6);
        r.values["gt_sedb_values"] = to_json(sedb);
        r.values["gt_edb_values"] = to_json(gt_edb_values(g.profiles, Convention::kAugmented));
        r.values["t_not_edb"] = std::move(missing);
        r.holds = false;
        d2.add(std::move(r));
      }
    }
    if (g.graph.edge_count() > 0 && is_sedb(g.profiles)) {
      t1.instance();
      t1.compare();
      if (!is_gt_edb(g.profiles, 1, Convention::kStrict)) {
        Record r = record(g.graph6, g.graph6);
        r.values["diameter"] = g.diameter;
        r.values["gt_edb_values"] = to_json(gt_edb_values(g.profiles, Convention::kStrict));
        r.holds = false;
        t1.add(std::move(r));
      }
    }
  }
  res.outcomes.push_back(d2.finish());
  res.outcomes.push_back(t1.finish());
  res.claim = "a diameter-2 generalized t-strongly edge distance-balanced graph (t >= 2) is "
              "generalized t-edge distance-balanced; every strongly edge distance-balanced "
              "graph (balanced at every level) is edge distance-balanced";
  res.instance_set = "connected graphs on <= " + std::to_string(ctx.config.atlas_n_max) +
                     " vertices";
  res.convention = "both";
  return res;
}

using CheckFn = CheckResult (*)(const Context&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"C1", check_c1},   {"C2", check_c2},   {"C3", check_c3},   {"C4", check_c4},
      {"C5", check_c5},   {"C6", check_c6},   {"C7", check_c7},   {"C8", check_c8},
      {"C9", check_c9},   {"C10", check_c10}, {"C11", check_c11}, {"C12", check_c12}};
  return checks;
}

bool needs_atlas(std::string_view id) {
  return id == "C2" || id == "C3" || id == "C8" || id == "C9" || id == "C12";
}

std::vector<std::string> selected(const VerifyConfig& config) {
  if (config.checks.empty()) return all_check_ids();
  std::vector<std::string> out;
  for (const auto& [id, fn] : registry()) {
    if (std::find(config.checks.begin(), config.checks.end(), id) != config.checks.end()) {
      out.push_back(id);
    }
  }
  return out;
}

Context make_context(const VerifyConfig& config, const std::vector<std::string>& ids) {
  Context ctx{config, {}, {}};
  if (std::any_of(ids.begin(), ids.end(), needs_atlas)) {
    for_each_connected(config.atlas_n_max, [&](const Graph& g) {
      if (g.edge_count() > 0) ctx.atlas.emplace_back(to_graph6(g), g);
    });
  }
  for (const auto& spec : config.product_corpus) {
    ctx.products_corpus.emplace_back(spec, generate_from_spec(spec));
  }
  return ctx;
}

CheckResult finish(std::string_view id, CheckResult r) {
  r.id = std::string(id);
  r.verdict = Verdict::kPass;
  for (const auto& o : r.outcomes) {
    if (o.verdict == Verdict::kCounterexample) {
      r.verdict = Verdict::kCounterexample;
    } else if (o.verdict == Verdict::kDiscrepancy && r.verdict == Verdict::kPass) {
      r.verdict = Verdict::kDiscrepancy;
    }
  }
  return r;
}

int thread_count(const VerifyConfig& config) {
  if (config.threads > 0) return config.threads;
  if (const char* env = std::getenv("EDGEBAL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Json record_list(const std::vector<Record>& records) {
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kCounterexample: return "COUNTEREXAMPLE";
    case Verdict::kDiscrepancy: return "DISCREPANCY";
  }
  return "UNKNOWN";
}

int CheckResult::instances() const {
  int total = 0;
  for (const auto& o : outcomes) total = std::max(total, o.instances);
  return total;
}

std::vector<Record> CheckResult::witnesses() const {
  std::vector<Record> out;
  for (const auto& o : outcomes) {
    for (const auto& r : o.records) {
      if (!r.holds) out.push_back(r);
    }
  }
  return out;
}

std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

void validate(const VerifyConfig& config) {
  if (config.atlas_n_max > kMaxAtlasVertices) {
    fail(ErrorCode::kBudgetExceeded, "scan budget " + std::to_string(config.atlas_n_max) +
                                         " exceeds " + std::to_string(kMaxAtlasVertices) +
                                         " vertices");
  }
  if (config.atlas_n_max < 2) {
    fail(ErrorCode::kParameterOutOfRange, "scan budget must be at least 2 vertices");
  }
  if (config.kntn_n_max < 1 || config.kntn_t_min < 1 || config.kntn_t_max < config.kntn_t_min ||
      config.formula_t_min < 1 || config.product_t_max < 1 || config.empty_factor_max < 1 ||
      config.witness_cap < 1) {
    fail(ErrorCode::kParameterOutOfRange, "verification ranges must be positive and ordered");
  }
  if (config.kntn_n_max * (1 + config.kntn_t_max) > kDefaultVertexBudget) {
    fail(ErrorCode::kBudgetExceeded, "K_{n,tn} family exceeds the vertex budget");
  }
  for (const auto& id : config.checks) {
    const auto& reg = registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const auto& e) { return e.first == id; })) {
      fail(ErrorCode::kParameterOutOfRange, "unknown check id '" + id + "'");
    }
  }
  std::size_t largest = 0;
  for (const auto& spec : config.product_corpus) {
    largest = std::max<std::size_t>(largest, generate_from_spec(spec).vertex_count());
  }
  if (largest * largest > static_cast<std::size_t>(kDefaultVertexBudget)) {
    fail(ErrorCode::kBudgetExceeded, "product corpus exceeds the vertex budget");
  }
}

CheckResult run_check(std::string_view id, const VerifyConfig& config) {
  VerifyConfig one = config;
  one.checks = {std::string(id)};
  validate(one);
  const Context ctx = make_context(one, one.checks);
  for (const auto& [name, fn] : registry()) {
    if (name == id) return finish(id, fn(ctx));
  }
  fail(ErrorCode::kParameterOutOfRange, "unknown check id '" + std::string(id) + "'");
}

VerificationReport run_all(const VerifyConfig& config) {
  validate(config);
  const auto ids = selected(config);
  const Context ctx = make_context(config, ids);

  std::vector<CheckFn> fns;
  for (const auto& id : ids) {
    for (const auto& [name, fn] : registry()) {
      if (name == id) fns.push_back(fn);
    }
  }
  std::vector<CheckResult> results(ids.size());
  std::vector<std::exception_ptr> errors(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      try {
        results[i] = finish(ids[i], fns[i](ctx));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n_threads = std::min<int>(thread_count(config), static_cast<int>(ids.size()));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < n_threads; ++k) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return {config, std::move(results)};
}

Json to_json(const Record& r) {
  Json j;
  j["instance"] = r.instance;
  j["graph6"] = r.graph6;
  if (r.edge) j["edge"] = pair_json(r.edge->alpha, r.edge->beta);
  j["holds"] = r.holds;
  j["values"] = r.values;
  return j;
}

Json to_json(const CheckResult& r) {
  Json j;
  j["id"] = r.id;
  j["claim"] = r.claim;
  j["instance_set"] = r.instance_set;
  j["convention"] = r.convention;
  j["verdict"] = to_string(r.verdict);
  j["instances"] = r.instances();
  j["witness_count"] = r.witnesses().size();
  Json outcomes = Json::array();
  for (const auto& o : r.outcomes) {
    Json oj;
    oj["label"] = o.label;
    oj["convention"] = o.convention ? Json(to_string(*o.convention)) : Json(nullptr);
    oj["verdict"] = to_string(o.verdict);
    oj["instances"] = o.instances;
    oj["comparisons"] = o.comparisons;
    oj["failures"] = o.failures;
    oj["records_are_complete"] = o.complete_records;
    oj["records"] = record_list(o.records);
    outcomes.push_back(std::move(oj));
  }
  j["outcomes"] = std::move(outcomes);
  return j;
}

Json to_json(const VerificationReport& report) {
  const auto& c = report.config;
  Json config;
  config["budget"] = c.atlas_n_max;
  config["kntn_n_max"] = c.kntn_n_max;
  config["kntn_t_range"] = pair_json(c.kntn_t_min, c.kntn_t_max);
  config["formula_t_min"] = c.formula_t_min;
  config["product_t_max"] = c.product_t_max;
  config["empty_factor_max"] = c.empty_factor_max;
  config["witness_cap"] = c.witness_cap;
  config["product_corpus"] = c.product_corpus;
  config["edb_corpus"] = c.edb_corpus;
  config["edged_factors"] = c.edged_factors;

  std::map<Verdict, int> tally;
  for (const auto& r : report.results) ++tally[r.verdict];
  Json summary;
  summary["checks"] = report.results.size();
  summary["pass"] = tally[Verdict::kPass];
  summary["counterexample"] = tally[Verdict::kCounterexample];
  summary["discrepancy"] = tally[Verdict::kDiscrepancy];

  Json j;
  j["config"] = std::move(config);
  j["summary"] = std::move(summary);
  Json results = Json::array();
  for (const auto& r : report.results) results.push_back(to_json(r));
  j["results"] = std::move(results);
  return j;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  out << pad("check", 6) << pad("verdict", 16) << pad("instances", 11) << "claim\n";
  for (const auto& r : report.results) {
    out << pad(r.id, 6) << pad(std::string(to_string(r.verdict)), 16)
        << pad(std::to_string(r.instances()), 11) << r.claim << '\n';
    for (const auto& o : r.outcomes) {
      out << "      - " << pad(o.label, 32) << pad(std::string(to_string(o.verdict)), 16)
          << o.instances << " instances, " << o.comparisons << " comparisons, " << o.failures
          << " failing\n";
      for (const auto& w : o.records) {
        if (w.holds) continue;
        out << "          witness " << w.instance << " [" << w.graph6 << "]";
        if (w.edge) out << " edge (" << w.edge->alpha << "," << w.edge->beta << ")";
        out << ' ' << w.values.dump() << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace edgebal
