#include <gtest/gtest.h>

#include <random>

#include "irrlab/constructions.hpp"
#include "irrlab/graph_io.hpp"
#include "irrlab/verify.hpp"
#include "oracles.hpp"

using namespace irrlab;

TEST(TreeTheorems, PathP4) {
  const TheoremReport r = check_tree_theorems(path_graph(4));
  EXPECT_TRUE(r.all_hold());
  EXPECT_TRUE(r.at("sigma_t_vs_sigma").equality);
  EXPECT_FALSE(r.at("star_equality").equality);
  EXPECT_FALSE(r.has("delta3_sigma_bound"));
}

TEST(TreeTheorems, StarS5) {
  const TheoremReport r = check_tree_theorems(star_graph(5));
  EXPECT_TRUE(r.all_hold());
  EXPECT_TRUE(r.at("star_equality").equality);
  EXPECT_FALSE(r.at("sigma_t_vs_sigma").equality);
  EXPECT_TRUE(r.at("greedy_irr_bound").equality);
}

TEST(TreeTheorems, Spider) {
  const Graph spider = Graph::from_edge_list(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  const TheoremReport r = check_tree_theorems(spider);
  EXPECT_TRUE(r.all_hold()) << r.to_json().dump();
  ASSERT_TRUE(r.has("delta3_sigma_bound"));
  // x = 1, y = 3: y <= x + 2, bound 4(x+2) - 2y = 6; sigma = 3 + 3 * 1 = 6.
  EXPECT_EQ(r.at("delta3_sigma_bound").witness["bound"], 6);
  EXPECT_EQ(r.at("delta3_sigma_bound").witness["sigma"], 6);
}

TEST(TreeTheorems, RejectsNonTrees) {
  EXPECT_THROW(check_tree_theorems(cycle_graph(5)), Error);
  EXPECT_THROW(check_tree_theorems(path_graph(2)), Error);
}

TEST(TreeTheorems, RandomTreesHold) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 40)(rng);
    const TheoremReport r = check_tree_theorems(oracle::random_tree(rng, n));
    EXPECT_TRUE(r.all_hold()) << r.to_json().dump();
  }
}

TEST(GreedyIdentity, Examples) {
  EXPECT_TRUE(check_greedy_identity({{2, 2, 1, 1}}));
  EXPECT_TRUE(check_greedy_identity({{3, 3, 2, 1, 1, 1, 1}}));
  EXPECT_TRUE(check_greedy_identity({{1, 1}}));
}

TEST(GreedyWalk, PathHasSingleIncrement) {
  for (int n = 3; n <= 10; ++n) {
    const GreedyWalkResult w = min_greedy_walk(path_graph(static_cast<std::size_t>(n)));
    EXPECT_EQ(w.r, 1);
    EXPECT_EQ(w.subsequence, (std::vector<int>{1, 2}));
    EXPECT_EQ(w.walk.size(), 2u);
    EXPECT_TRUE(replay_consistent(path_graph(static_cast<std::size_t>(n)), w));
  }
}

TEST(GreedyWalk, RegularGraphIsTrivial) {
  const GreedyWalkResult w = min_greedy_walk(cycle_graph(6));
  EXPECT_EQ(w.r, 0);
  EXPECT_EQ(w.walk.size(), 1u);
}

TEST(GreedyWalk, ChainClimbsEveryLevel) {
  const Graph g = extremal_chain({10, 0, false}).graph;
  const GreedyWalkResult w = min_greedy_walk(g);
  EXPECT_EQ(w.r, 4);
  EXPECT_EQ(w.subsequence, (std::vector<int>{3, 4, 5, 6, 7}));
  EXPECT_TRUE(replay_consistent(g, w));
}

TEST(GreedyWalk, DisconnectedThrows) {
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(min_greedy_walk(g), Error);
}

TEST(GreedyWalk, RandomGraphsAgreeWithExactPathSearch) {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 150) {
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    const Graph g = oracle::random_graph(rng, n, 0.45);
    if (!is_connected(g) || measure_all(g).sigma == 0) continue;
    ++checked;
    const GreedyWalkResult w = min_greedy_walk(g);
    const GreedyWalkResult p = min_greedy_simple_path(g);
    EXPECT_TRUE(replay_consistent(g, w));
    EXPECT_TRUE(replay_consistent(g, p));
    EXPECT_LE(w.r, p.r);
    const auto d = degrees(g);
    EXPECT_EQ(w.subsequence.front(), d.min());
    EXPECT_EQ(w.subsequence.back(), d.max());
  }
}

TEST(RatioBounds, PathP10) {
  const TheoremReport r = check_ratio_bounds(path_graph(10));
  EXPECT_TRUE(r.all_hold()) << r.to_json().dump();
  EXPECT_TRUE(r.has("path_amgm"));
  EXPECT_TRUE(r.at("walk_le_path").equality);
}

TEST(RatioBounds, ChainK12) {
  const TheoremReport r = check_ratio_bounds(extremal_chain({12, 0, false}).graph);
  EXPECT_TRUE(r.all_hold()) << r.to_json().dump();
  EXPECT_FALSE(r.has("path_amgm"));  // beyond the exact-path cap
  EXPECT_EQ(r.at("walk_r_bound").witness["r"], 6);
}

TEST(RatioBounds, Preconditions) {
  EXPECT_THROW(check_ratio_bounds(cycle_graph(5)), Error);
  EXPECT_THROW(check_ratio_bounds(Graph::from_edge_list(3, {{0, 1}})), Error);
}

TEST(LabeledGraphs, CountsMatchUnionFind) {
  auto count = [](int n) {
    std::uint64_t c = 0;
    for_each_connected_labeled_graph(n, [&](const Graph&) { ++c; });
    return c;
  };
  EXPECT_EQ(count(1), 1u);
  EXPECT_EQ(count(2), 1u);
  EXPECT_EQ(count(3), 4u);
  EXPECT_EQ(count(4), 38u);
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(count(n), oracle::union_find_connected_count(n)) << "n=" << n;
  EXPECT_THROW(for_each_connected_labeled_graph(8, [](const Graph&) {}), Error);
}

TEST(Scans, TreeScanSmallOrders) {
  const TreeScanSummary s = exhaustive_tree_scan(3, 10);
  EXPECT_EQ(s.violation_count(), 0u);
  for (const auto& row : s.rows) {
    EXPECT_EQ(row.path_equalities, 1u);
    EXPECT_EQ(row.star_equalities, 1u);
  }
  EXPECT_EQ(s.rows.back().trees, 106u);
}

TEST(Scans, GraphScanSmallOrders) {
  const GraphScanSummary s = exhaustive_graph_scan(2, 5);
  EXPECT_EQ(s.violation_count(), 0u) << s.to_json().dump();
  EXPECT_EQ(s.rows.back().connected, 728u);
}

TEST(Scans, GreedyScanSmallOrders) {
  EXPECT_EQ(greedy_scan(11, 9).violation_count(), 0u);
}

TEST(Scans, DeterministicAcrossJobCounts) {
  EXPECT_EQ(exhaustive_tree_scan(3, 9, 1).to_json(), exhaustive_tree_scan(3, 9, 3).to_json());
  EXPECT_EQ(exhaustive_graph_scan(2, 5, 1).to_json(), exhaustive_graph_scan(2, 5, 3).to_json());
}

TEST(RatioScan, SmallRange) {
  const RatioScan s = ratio_scan({10, 12, 14, 16}, 0);
  EXPECT_TRUE(s.sigma_matches());
  EXPECT_TRUE(s.strictly_increasing());
  EXPECT_GT(s.slope, 2.0);
  EXPECT_EQ(s.rows[0].n, 52);
  EXPECT_THROW(ratio_scan({11}, 0), Error);
}

TEST(LogLogSlope, ExactPowerLaw) {
  EXPECT_NEAR(loglog_slope({1, 2, 4, 8}, {3, 12, 48, 192}), 2.0, 1e-12);
  EXPECT_THROW(loglog_slope({1}, {1}), Error);
}
