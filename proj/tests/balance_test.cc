#include <random>

#include <gtest/gtest.h>

#include "edgebal/balance.h"
#include "edgebal/distance.h"
#include "edgebal/errors.h"
#include "edgebal/generators.h"
#include "edgebal/graph.h"
#include "edgebal/products.h"
#include "oracle.h"

namespace edgebal {
namespace {

TEST(DistanceTest, MatchesFloydWarshall) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_connected(rng, 2 + trial % 11, 0.25);
    const DistanceMatrix d(g);
    const auto fw = oracle::floyd_warshall(g);
    ASSERT_EQ(d.size(), g.vertex_count());
    for (int a = 0; a < g.vertex_count(); ++a) {
      for (int b = 0; b < g.vertex_count(); ++b) ASSERT_EQ(d(a, b), fw[a][b]);
    }
    EXPECT_EQ(diameter(d), oracle::diameter(fw));
  }
}

TEST(DistanceTest, DisconnectedGraphs) {
  const DistanceMatrix d(empty(3));
  EXPECT_FALSE(d.connected());
  EXPECT_EQ(d(0, 1), DistanceMatrix::kUnreachable);
  EXPECT_THROW(diameter(d), Error);
  EXPECT_THROW(edge_szeged_index(from_edge_list(4, {{0, 1}, {2, 3}})), Error);
}

TEST(DistanceTest, EdgeDistances) {
  const Graph g = path(5);
  const DistanceMatrix d(g);
  EXPECT_EQ(vertex_edge_distance(d, 0, Edge{3, 4}), 3);
  EXPECT_EQ(vertex_edge_distance(d, 4, Edge{3, 4}), 0);
  EXPECT_EQ(edge_edge_distance(d, Edge{0, 1}, Edge{3, 4}), 2);
  EXPECT_EQ(edge_edge_distance(d, Edge{0, 1}, Edge{1, 2}), 0);
}

TEST(BalanceTest, CountsMatchOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_connected(rng, 2 + trial % 10, 0.3);
    const DistanceMatrix d(g);
    const auto fw = oracle::floyd_warshall(g);
    const auto pairs = oracle::edge_pairs(g);
    for (const auto& e : g.edges()) {
      for (const OrientedEdge f : {oriented(e), oriented(e).reversed()}) {
        const auto want = oracle::counts(fw, pairs, f.alpha, f.beta);
        const VertexCounts vc = vertex_counts(g, d, f);
        EXPECT_EQ(vc, (VertexCounts{want.n_alpha, want.n_beta, want.n_zero}));
        EXPECT_EQ(edge_counts(g, d, f, Convention::kStrict),
                  (EdgeCounts{want.m_alpha, want.m_beta, want.m_zero}));
        EXPECT_EQ(edge_counts(g, d, f, Convention::kAugmented),
                  (EdgeCounts{want.m_alpha + 1, want.m_beta + 1, want.m_zero}));
      }
    }
  }
}

TEST(BalanceTest, AccountingIdentities) {
  const Graph g = hypercube(3);
  const DistanceMatrix d(g);
  for (const auto& e : g.edges()) {
    const auto s = edge_counts(g, d, oriented(e), Convention::kStrict);
    const auto a = edge_counts(g, d, oriented(e), Convention::kAugmented);
    EXPECT_EQ(s.m_alpha + s.m_beta + s.m_zero, g.edge_count() - 1);
    EXPECT_EQ(a.m_alpha + a.m_beta + a.m_zero, g.edge_count() + 1);
    const auto v = vertex_counts(g, d, oriented(e));
    EXPECT_EQ(v.n_alpha + v.n_beta + v.n_zero, g.vertex_count());
  }
}

TEST(BalanceTest, OrientationSwapMirrorsCounts) {
  const Graph g = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {0, 4}});
  const DistanceMatrix d(g);
  for (const auto& e : g.edges()) {
    const auto fwd = edge_balance(g, d, oriented(e), Convention::kAugmented);
    const auto back = edge_balance(g, d, oriented(e).reversed(), Convention::kAugmented);
    EXPECT_EQ(fwd.swapped().vertex, back.vertex);
    EXPECT_EQ(fwd.swapped().edges, back.edges);
    EXPECT_EQ(fwd.swapped().edge, back.edge);
  }
}

TEST(BalanceTest, RejectsMissingEdgesAndBadMatrices) {
  const Graph g = path(4);
  const DistanceMatrix d(g);
  try {
    edge_counts(g, d, OrientedEdge{0, 2}, Convention::kStrict);
    FAIL() << "expected EdgeNotFound";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEdgeNotFound);
  }
  const DistanceMatrix other(path(5));
  EXPECT_THROW(vertex_counts(g, other, OrientedEdge{0, 1}), Error);
}

TEST(PartitionTest, CellsMatchOracleAndSumToCounts) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_connected(rng, 3 + trial % 9, 0.25);
    const DistanceMatrix d(g);
    const auto fw = oracle::floyd_warshall(g);
    const auto pairs = oracle::edge_pairs(g);
    for (const auto& e : g.edges()) {
      const OrientedEdge f = oriented(e);
      const EdgePartition p = distance_partition(g, d, f);
      const auto want = oracle::cells(fw, pairs, f.alpha, f.beta);
      ASSERT_EQ(p.cells().size(), want.size());
      std::size_t near_a = 0, near_b = 0, tied = 0;
      for (const auto& [key, members] : p.cells()) {
        EXPECT_EQ(static_cast<int>(members.size()), oracle::cell(want, key.first, key.second));
        // Only cells (i-1,i), (i,i-1) and (i,i) can be nonempty.
        EXPECT_LE(std::abs(key.first - key.second), 1);
        if (key.first < key.second) near_a += members.size();
        if (key.first > key.second) near_b += members.size();
        if (key.first == key.second) tied += members.size();
      }
      const auto c = edge_counts(g, d, f, Convention::kStrict);
      EXPECT_EQ(near_a, static_cast<std::size_t>(c.m_alpha));
      EXPECT_EQ(near_b, static_cast<std::size_t>(c.m_beta));
      EXPECT_EQ(tied, static_cast<std::size_t>(c.m_zero));
      EXPECT_EQ(p.total(), static_cast<std::size_t>(g.edge_count() - 1));
      EXPECT_EQ(p.cell_size(0, 0), 0u);
    }
  }
}

TEST(IndexTest, KnownValues) {
  // C4: every edge has n = (2, 2) and strict m = (1, 1).
  EXPECT_EQ(szeged_index(cycle(4)), 16);
  EXPECT_EQ(edge_szeged_index(cycle(4), Convention::kStrict), 4);
  EXPECT_EQ(edge_szeged_index(cycle(4), Convention::kAugmented), 16);
  // K_{2,4}: strict m = (3, 1) per edge, augmented (4, 2).
  EXPECT_EQ(edge_szeged_index(complete_bipartite(2, 4), Convention::kStrict), 24);
  EXPECT_EQ(edge_szeged_index(complete_bipartite(2, 4), Convention::kAugmented), 64);
  // Trees: n_alpha * n_beta summed over edges is the Wiener index of P4 = 10.
  EXPECT_EQ(szeged_index(path(4)), 10);
}

TEST(IndexTest, MatchesOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_connected(rng, 2 + trial % 12, 0.3);
    EXPECT_EQ(szeged_index(g), oracle::szeged(g));
    EXPECT_EQ(edge_szeged_index(g, Convention::kStrict), oracle::edge_szeged(g, false));
    EXPECT_EQ(edge_szeged_index(g, Convention::kAugmented), oracle::edge_szeged(g, true));
  }
}

TEST(ClaimedFormulaTest, ExactRationals) {
  const auto c = claimed_edge_szeged(2, 2);
  EXPECT_EQ(c.numerator, 784);
  EXPECT_EQ(c.denominator, 9);
  EXPECT_EQ(c.value(), Rational(784, 9));
  EXPECT_NE(c.value().denominator(), 1);
  // t = 3, n = 2: 3 * 81 * 3 * 4 / 16 = 225.
  EXPECT_EQ(claimed_edge_szeged(2, 3).value(), Rational(225));
  EXPECT_THROW(claimed_edge_szeged(0, 2), Error);
  EXPECT_THROW(claimed_edge_szeged(2, 101), Error);
}

TEST(ConventionTest, ParseAndPrint) {
  EXPECT_EQ(parse_convention("strict"), Convention::kStrict);
  EXPECT_EQ(parse_convention("augmented"), Convention::kAugmented);
  EXPECT_FALSE(parse_convention("loose").has_value());
  EXPECT_EQ(to_string(Convention::kAugmented), "augmented");
}

}  // namespace
}  // namespace edgebal
