#include <gtest/gtest.h>

#include <map>
#include <set>

#include "irrlab/constructions.hpp"
#include "irrlab/measures.hpp"

using namespace irrlab;

namespace {

std::map<int, int> degree_histogram(const Graph& g) {
  std::map<int, int> h;
  for (std::size_t v = 0; v < g.order(); ++v) ++h[g.degree(static_cast<Vertex>(v))];
  return h;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(DifferenceFactor, HalfClassIsMatching) {
  EXPECT_EQ(difference_factor(8, 4), (EdgeList{{0, 4}, {1, 5}, {2, 6}, {3, 7}}));
}

TEST(DifferenceFactor, TwoTrianglesForK6) {
  const Graph g = Graph::from_edge_list(6, difference_factor(6, 2));
  EXPECT_EQ(g.size(), 6u);
  EXPECT_FALSE(is_connected(g));
  for (std::size_t v = 0; v < 6; ++v) EXPECT_EQ(g.degree(static_cast<Vertex>(v)), 2);
}

TEST(DifferenceFactor, ClassesPartitionCompleteGraph) {
  for (int k : {4, 8, 10, 14}) {
    std::set<std::pair<Vertex, Vertex>> all;
    std::size_t total = 0;
    for (int i = 1; i <= k / 2; ++i) {
      const auto cls = difference_factor(k, i);
      total += cls.size();
      all.insert(cls.begin(), cls.end());
    }
    EXPECT_EQ(total, all.size());
    EXPECT_EQ(Graph::from_edge_list(static_cast<std::size_t>(k), EdgeList(all.begin(), all.end())),
              complete_graph(static_cast<std::size_t>(k)));
  }
  EXPECT_EQ(kind_of([] { difference_factor(8, 5); }), ErrorKind::BadClassIndex);
  EXPECT_EQ(kind_of([] { difference_factor(8, 0); }), ErrorKind::BadClassIndex);
  EXPECT_EQ(kind_of([] { difference_factor(7, 1); }), ErrorKind::BadClassIndex);
}

TEST(NearRegularBlock, Examples) {
  const Graph g = near_regular_block(8, 4);
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.size(), 15u);
  EXPECT_EQ(degree_histogram(g), (std::map<int, int>{{2, 1}, {4, 7}}));
  EXPECT_EQ(g.degree(7), 2);

  const Graph h = near_regular_block(12, 5);
  EXPECT_EQ(degree_histogram(h), (std::map<int, int>{{3, 1}, {5, 11}}));
  EXPECT_EQ(h.degree(11), 3);

  EXPECT_EQ(kind_of([] { near_regular_block(8, 5); }), ErrorKind::ParamsOutOfRange);
  EXPECT_EQ(kind_of([] { near_regular_block(9, 4); }), ErrorKind::ParamsOutOfRange);
  EXPECT_EQ(kind_of([] { near_regular_block(10, 3); }), ErrorKind::ParamsOutOfRange);
}

TEST(NearRegularBlock, AllAdmissibleParameters) {
  for (int k = 8; k <= 30; k += 2) {
    for (int r = 4; r <= k - 4; ++r) {
      const Graph g = near_regular_block(k, r);
      ASSERT_TRUE(is_connected(g));
      EXPECT_EQ(degree_histogram(g), (std::map<int, int>{{r - 2, 1}, {r, k - 1}})) << k << "," << r;
      EXPECT_EQ(g.degree(static_cast<Vertex>(k - 1)), r - 2);
    }
  }
}

TEST(SideBlock, Examples) {
  const Graph g = side_block(11, 3);
  EXPECT_EQ(g.size(), 16u);
  EXPECT_EQ(degree_histogram(g), (std::map<int, int>{{2, 1}, {3, 10}}));
  EXPECT_EQ(g.degree(0), 2);

  const Graph h = side_block(13, 7);
  EXPECT_EQ(degree_histogram(h), (std::map<int, int>{{6, 1}, {7, 12}}));
  EXPECT_EQ(h.degree(0), 6);

  EXPECT_EQ(kind_of([] { side_block(10, 3); }), ErrorKind::ParamsOutOfRange);
  EXPECT_EQ(kind_of([] { side_block(11, 4); }), ErrorKind::ParamsOutOfRange);
  EXPECT_EQ(kind_of([] { side_block(11, 11); }), ErrorKind::ParamsOutOfRange);
}

TEST(SideBlock, AllAdmissibleParameters) {
  for (int m = 5; m <= 31; m += 2) {
    for (int t = 3; t <= m - 2; t += 2) {
      if (t == 3 || t >= 5) {
        const Graph g = side_block(m, t);
        ASSERT_TRUE(is_connected(g));
        EXPECT_EQ(degree_histogram(g), (std::map<int, int>{{t - 1, 1}, {t, m - 1}})) << m << "," << t;
      }
    }
  }
}

TEST(OddBlock, DegreesAndConnectivity) {
  for (int k = 10; k <= 26; k += 2) {
    const Graph g = near_regular_block_odd4(k);
    ASSERT_TRUE(is_connected(g));
    EXPECT_EQ(degree_histogram(g), (std::map<int, int>{{2, 1}, {4, k}}));
    EXPECT_EQ(g.degree(static_cast<Vertex>(k)), 2);
  }
}

TEST(ExtremalChain, K10) {
  const ChainGraph c = extremal_chain({10, 0, false});
  EXPECT_EQ(c.graph.order(), 52u);
  EXPECT_EQ(degree_histogram(c.graph), (std::map<int, int>{{3, 11}, {4, 10}, {5, 10}, {6, 10}, {7, 11}}));
  EXPECT_TRUE(is_connected(c.graph));
  EXPECT_EQ(c.blocks.size(), 5u);
  EXPECT_EQ(c.bridges.size(), 4u);
  const MeasureReport m = measure_all(c.graph);
  EXPECT_EQ(m.sigma, 4);

  EXPECT_EQ(extremal_chain({10, 1, false}).graph.order(), 56u);
  const ChainGraph odd = extremal_chain({10, 0, true});
  EXPECT_EQ(odd.graph.order(), 53u);
  EXPECT_EQ(measure_all(odd.graph).sigma, 4);
}

TEST(ExtremalChain, OrderAndSigmaAcrossParameters) {
  for (int k = 10; k <= 20; k += 2) {
    for (int s : {0, 1, 2}) {
      for (bool odd : {false, true}) {
        const ChainParams p{k, s, odd};
        const ChainGraph c = extremal_chain(p);
        EXPECT_EQ(static_cast<std::int64_t>(c.graph.order()), p.expected_order());
        EXPECT_TRUE(is_connected(c.graph));
        EXPECT_EQ(measure_all(c.graph).sigma, k - 6);
        if (odd) {
          EXPECT_EQ(c.graph.order() % 2, 1u);
        }
      }
    }
  }
}

TEST(ExtremalChain, ManifestDescribesBlocks) {
  const ChainGraph c = extremal_chain({12, 0, false});
  const auto j = c.manifest();
  EXPECT_EQ(j["order"], c.graph.order());
  ASSERT_EQ(j["blocks"].size(), 7u);
  EXPECT_EQ(j["blocks"][0]["degree"], 3);
  EXPECT_EQ(j["blocks"][6]["degree"], 9);
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    const int target = c.blocks[b].degree;
    const Vertex v = c.blocks[b].deficient;
    // Each deficient vertex gets its missing degree back from the bridges.
    EXPECT_EQ(c.graph.degree(v), target);
  }
  EXPECT_EQ(kind_of([] { extremal_chain({11, 0, false}); }), ErrorKind::ParamsOutOfRange);
  EXPECT_EQ(kind_of([] { extremal_chain({10, -1, false}); }), ErrorKind::ParamsOutOfRange);
}

TEST(QuadraticExample, Structure) {
  const Graph g = quadratic_example(12);
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(degree_histogram(g), (std::map<int, int>{{2, 6}, {5, 6}}));
  EXPECT_EQ(measure_all(g).sigma, 18);
  for (int n = 10; n <= 60; n += 2) {
    const MeasureReport m = measure_all(quadratic_example(n));
    EXPECT_EQ(m.sigma, 2 * (n / 2 - 3) * (n / 2 - 3));
  }
  EXPECT_EQ(kind_of([] { quadratic_example(11); }), ErrorKind::ParamsOutOfRange);
  EXPECT_EQ(kind_of([] { quadratic_example(8); }), ErrorKind::ParamsOutOfRange);
}
