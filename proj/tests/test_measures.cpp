#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "irrlab/measures.hpp"
#include "irrlab/trees.hpp"
#include "oracles.hpp"

using namespace irrlab;

TEST(Measures, PathP4) {
  const MeasureReport r = measure_all(path_graph(4));
  EXPECT_EQ(r.n, 4);
  EXPECT_EQ(r.m, 3);
  EXPECT_EQ(r.delta, 1);
  EXPECT_EQ(r.Delta, 2);
  EXPECT_EQ(r.irr, 2);
  EXPECT_EQ(r.sigma, 2);
  EXPECT_EQ(r.sigma_t, 4);
  EXPECT_EQ(r.variance(), Rational::make(4, 16));
  EXPECT_EQ(r.var_num, 1);
  EXPECT_EQ(r.var_den, 4);
}

TEST(Measures, StarHasSigmaEqualSigmaT) {
  const MeasureReport r = measure_all(star_graph(5));
  EXPECT_EQ(r.irr, 12);
  EXPECT_EQ(r.sigma, 36);
  EXPECT_EQ(r.sigma_t, 36);
  EXPECT_EQ(ratio(r), Rational::make(1, 1));
}

TEST(Measures, RegularGraphsAreZero) {
  for (int n = 3; n <= 12; ++n) {
    const MeasureReport r = measure_all(cycle_graph(static_cast<std::size_t>(n)));
    EXPECT_EQ(r.irr, 0);
    EXPECT_EQ(r.sigma, 0);
    EXPECT_EQ(r.sigma_t, 0);
    EXPECT_EQ(r.var_num, 0);
  }
  try {
    ratio(complete_graph(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RegularGraph);
  }
}

TEST(Measures, PathRatioIsNMinusTwo) {
  for (int n = 3; n <= 30; ++n) EXPECT_EQ(ratio(path_graph(static_cast<std::size_t>(n))), Rational::make(n - 2, 1));
}

TEST(Measures, ClosedFormExamples) {
  EXPECT_EQ(sigma_t_closed_form(DegreeVector{{1, 2, 2, 1}}), 4);
  EXPECT_EQ(sigma_t_closed_form(DegreeVector{{4, 1, 1, 1, 1}}), 36);
  EXPECT_EQ(sigma_t_pairwise(DegreeVector{{4, 1, 1, 1, 1}}), 36);
}

TEST(Measures, SumCenteredSquares) {
  EXPECT_EQ(sum_centered_squares(DegreeVector{{1, 2, 2, 1}}, 2), 2);
  EXPECT_EQ(sum_centered_squares(DegreeVector{{4, 1, 1, 1, 1}}, 2), 8);
  EXPECT_EQ(sum_centered_squares(DegreeVector{{3, 1, 4, 1, 5}}, 0), 9 + 1 + 16 + 1 + 25);
}

TEST(Measures, EmptyGraphRejected) {
  EXPECT_THROW(measure_all(Graph{}), Error);
}

TEST(Measures, Serialization) {
  const MeasureReport r = measure_all(path_graph(4));
  EXPECT_EQ(std::string(kMeasureCsvHeader), "n,m,delta,Delta,irr,sigma,sigma_t,var_num,var_den");
  EXPECT_EQ(to_csv_row(r), "4,3,1,2,2,2,4,1,4");
  EXPECT_EQ(to_json(r).dump(),
            R"({"n":4,"m":3,"delta":1,"Delta":2,"irr":2,"sigma":2,"sigma_t":4,"var_num":1,"var_den":4})");
}

TEST(MeasuresProperty, InvariantsOnRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 40)(rng);
    const double p = std::uniform_real_distribution<double>(0, 1)(rng);
    const Graph g = oracle::random_graph(rng, n, p);
    const MeasureReport r = measure_all(g);
    const DegreeVector d = degrees(g);
    EXPECT_EQ(sigma_t_closed_form(d), sigma_t_pairwise(d));
    EXPECT_LE(r.sigma, r.sigma_t);
    EXPECT_LE(r.irr, r.sigma);
    // irr = sigma iff every edge joins degrees differing by at most one.
    bool small_steps = true;
    for (auto [u, v] : g.edges()) small_steps &= std::abs(d[static_cast<std::size_t>(u)] - d[static_cast<std::size_t>(v)]) <= 1;
    EXPECT_EQ(r.irr == r.sigma, small_steps);
    EXPECT_EQ(Rational::make(r.sigma_t, r.n * r.n), r.variance());
    const bool regular = r.delta == r.Delta;
    EXPECT_EQ(regular, r.sigma_t == 0);
    // All three vanish together (on connected graphs; a disconnected graph
    // can be locally regular on every edge without being regular).
    if (is_connected(g)) {
      EXPECT_EQ(regular, r.sigma == 0);
      EXPECT_EQ(regular, r.irr == 0);
    }
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(measure_all(relabel(g, perm)), r);
  }
}

TEST(MeasuresProperty, TreesSatisfyIrrBound) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 60)(rng);
    const MeasureReport r = measure_all(oracle::random_tree(rng, n));
    EXPECT_GT(r.n * r.irr, r.sigma_t);
  }
}
