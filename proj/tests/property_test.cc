// Seeded randomized properties over connected graphs.

#include <random>

#include <gtest/gtest.h>

#include "edgebal/balance.h"
#include "edgebal/classify.h"
#include "edgebal/graph6.h"
#include "edgebal/products.h"
#include "edgebal/report_json.h"
#include "oracle.h"

namespace edgebal {
namespace {

constexpr unsigned kSeed = 20240607;

class RandomGraphs : public ::testing::TestWithParam<int> {
 protected:
  Graph make() {
    std::mt19937 rng(kSeed + GetParam());
    std::uniform_int_distribution<int> size(2, 14);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    const int n = size(rng);
    rng_ = rng;
    return oracle::random_connected(rng_, n, density(rng));
  }
  std::mt19937 rng_;
};

TEST_P(RandomGraphs, ClassificationIsLabelInvariant) {
  const Graph g = make();
  const Graph h = relabel(g, oracle::random_permutation(rng_, g.vertex_count()));
  for (Convention conv : {Convention::kStrict, Convention::kAugmented}) {
    const auto a = full_report(g, conv);
    const auto b = full_report(h, conv);
    EXPECT_EQ(a.gt_edb_values, b.gt_edb_values);
    EXPECT_EQ(a.gt_db_values, b.gt_db_values);
    EXPECT_EQ(a.gt_sedb_values, b.gt_sedb_values);
    EXPECT_EQ(a.gt_nedb, b.gt_nedb);
    EXPECT_EQ(a.gt_ndb, b.gt_ndb);
    EXPECT_EQ(a.diameter, b.diameter);
    EXPECT_EQ(a.bipartite, b.bipartite);
  }
  EXPECT_EQ(szeged_index(g), szeged_index(h));
  EXPECT_EQ(edge_szeged_index(g), edge_szeged_index(h));
}

TEST_P(RandomGraphs, CountIdentities) {
  const Graph g = make();
  const DistanceMatrix d(g);
  for (const auto& e : g.edges()) {
    const OrientedEdge f = oriented(e);
    const auto strict = edge_counts(g, d, f, Convention::kStrict);
    const auto aug = edge_counts(g, d, f, Convention::kAugmented);
    EXPECT_EQ(strict.m_alpha + strict.m_beta + strict.m_zero, g.edge_count() - 1);
    EXPECT_EQ(aug.m_alpha + aug.m_beta + aug.m_zero, g.edge_count() + 1);
    EXPECT_EQ(aug.m_zero, strict.m_zero);
    EXPECT_EQ(edge_counts(g, d, f.reversed(), Convention::kStrict), strict.swapped());
    const auto v = vertex_counts(g, d, f);
    EXPECT_GE(v.n_alpha, 1);
    EXPECT_GE(v.n_beta, 1);
    EXPECT_EQ(v.n_alpha + v.n_beta + v.n_zero, g.vertex_count());
  }
}

TEST_P(RandomGraphs, Graph6RoundTrip) {
  const Graph g = make();
  EXPECT_EQ(parse_graph6(to_graph6(g)), g);
}

TEST_P(RandomGraphs, StrongBalanceImpliesEdgeBalance) {
  const Graph g = make();
  const DistanceMatrix d(g);
  if (is_sedb(g, d)) EXPECT_TRUE(is_gt_edb(g, d, 1, Convention::kStrict));
}

TEST_P(RandomGraphs, CartesianWithK2DoublesEdgeCountsPlusCopies) {
  // Edges of G x K2 along G: m_(a1,b) = 2 m_a1 + n_a1 (strict).
  const Graph g = make();
  if (g.vertex_count() > 10) return;
  const Graph k2 = from_edge_list(2, {{0, 1}});
  const Graph p = cartesian_product(g, k2);
  const DistanceMatrix dg(g);
  const DistanceMatrix dp(p);
  for (const auto& e : g.edges()) {
    const auto base = edge_counts(g, dg, oriented(e), Convention::kStrict);
    const auto vc = vertex_counts(g, dg, oriented(e));
    const OrientedEdge lifted{product_vertex(k2, e.u, 0), product_vertex(k2, e.v, 0)};
    const auto got = edge_counts(p, dp, lifted, Convention::kStrict);
    EXPECT_EQ(got.m_alpha, 2 * base.m_alpha + vc.n_alpha);
    EXPECT_EQ(got.m_beta, 2 * base.m_beta + vc.n_beta);
  }
}

TEST_P(RandomGraphs, JsonReportIsStable) {
  const Graph g = make();
  const auto a = to_json(full_report(g, Convention::kAugmented)).dump();
  const auto b = to_json(full_report(g, Convention::kAugmented)).dump();
  EXPECT_EQ(a, b);
}

INSTANTIATE_TEST_SUITE_P(Seeded, RandomGraphs, ::testing::Range(0, 40));

}  // namespace
}  // namespace edgebal
