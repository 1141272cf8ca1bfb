#include <gtest/gtest.h>

#include "chordcenter/chordality.hpp"
#include "chordcenter/metrics.hpp"
#include "chordcenter/oracle.hpp"
#include "chordcenter/stretched.hpp"
#include "support.hpp"

using namespace chordcenter;
using namespace testing_support;

namespace {

// Every diametrical set the oracle accepts as t-stretched.
std::vector<VertexSet> oracle_stretched_sets(const Graph& g, int t) {
  std::vector<VertexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    VertexSet s = VertexSet::from_bits(bits);
    if (s.size() < 2 || !is_diametrical(g, s)) continue;
    if (brute_check_stretched(g, s, t) == StretchVerdict::valid) out.push_back(s);
  }
  return out;
}

bool oracle_maximal(const Graph& g, VertexSet s, int t) {
  for (VertexSet other : oracle_stretched_sets(g, t)) {
    if (s.subset_of(other) && other != s) return false;
  }
  return true;
}

}  // namespace

TEST(CheckStretched, PathEndpoints) {
  Graph p4 = named::path(4);
  EXPECT_TRUE(check_t_stretched(p4, set({0, 3}), 1).ok());
  StretchCheck two = check_t_stretched(p4, set({0, 3}), 2);
  ASSERT_TRUE(two.ok());
  EXPECT_EQ(two.checks[0].separator->x, set({2}));
  EXPECT_EQ(two.checks[1].separator->x, set({1}));
  EXPECT_EQ(brute_check_stretched(p4, set({0, 3}), 2), StretchVerdict::valid);
}

TEST(CheckStretched, ThreePathsExample) {
  for (int t : {2, 3}) {
    ThreePaths ex = three_paths(t, 2, 2, 1);
    const VertexSet ab = set({ex.a0, ex.b0});
    const VertexSet ac = set({ex.a0, ex.c0});
    ASSERT_TRUE(is_diametrical(ex.g, ab));
    ASSERT_TRUE(is_diametrical(ex.g, ac));
    EXPECT_EQ(brute_check_stretched(ex.g, ab, t), StretchVerdict::invalid) << t;
    EXPECT_EQ(brute_check_stretched(ex.g, ac, t), StretchVerdict::valid) << t;
    EXPECT_FALSE(check_t_stretched(ex.g, ab, t).ok()) << t;
    EXPECT_TRUE(check_t_stretched(ex.g, ac, t).ok()) << t;
  }
}

TEST(CheckStretched, Preconditions) {
  Graph p4 = named::path(4);
  EXPECT_THROW(check_t_stretched(p4, set({0, 2}), 1), GraphError);
  EXPECT_THROW(check_t_stretched(p4, set({0, 3}), 3), GraphError);
  EXPECT_THROW(check_t_stretched(p4, set({0, 3}), 0), GraphError);
  EXPECT_THROW(check_t_stretched(Graph(2), set({0, 1}), 1), GraphError);
}

TEST(BruteCheck, NotApplicableWithoutValidT) {
  EXPECT_EQ(brute_check_stretched(named::complete(3), set({0, 1}), 1),
            StretchVerdict::not_applicable);
}

TEST(Build, PathReturnsEndpoints) {
  StretchedSet s = build_t_stretched(named::path(4), 2);
  EXPECT_EQ(s.members, set({0, 3}));
  EXPECT_EQ(s.at(0).x, set({2}));
  EXPECT_EQ(s.at(3).x, set({1}));
}

TEST(Build, SixCycleGivesAntipodalPair) {
  Graph c6 = named::cycle(6);
  StretchedSet s = build_t_stretched(c6, 1);
  ASSERT_EQ(s.members.size(), 2);
  auto v = s.members.to_vector();
  EXPECT_EQ(v[1] - v[0], 3);
  EXPECT_EQ(brute_check_stretched(c6, s.members, 1), StretchVerdict::valid);
}

TEST(Build, FixtureAtTwo) {
  Graph f = named::figure1();
  StretchedSet s = build_t_stretched(f, 2);
  EXPECT_TRUE(is_diametrical(f, s.members));
  EXPECT_EQ(brute_check_stretched(f, s.members, 2), StretchVerdict::valid);
  EXPECT_TRUE(check_t_stretched(f, s.members, 2).ok());
}

TEST(Build, RangeGuard) {
  EXPECT_THROW(build_t_stretched(named::cycle(6), 3), GraphError);
  EXPECT_THROW(build_t_stretched(named::complete(4), 1), GraphError);
  EXPECT_THROW(build_t_stretched(named::path(4), 0), GraphError);
}

TEST(Extend, PathStaysPut) {
  StretchedSet s = extend_to_maximal(named::path(4), build_t_stretched(named::path(4), 2));
  EXPECT_EQ(s.members, set({0, 3}));
  EXPECT_TRUE(s.maximal);
}

TEST(Extend, StarAgreesWithDefinition) {
  Graph star = named::star(3);
  StretchedSet s = extend_to_maximal(star, build_t_stretched(star, 1));
  EXPECT_EQ(brute_check_stretched(star, s.members, 1), StretchVerdict::valid);
  EXPECT_TRUE(oracle_maximal(star, s.members, 1));
  // The hub isolates each leaf, so no three leaves are 1-stretched.
  EXPECT_EQ(brute_check_stretched(star, set({1, 2, 3}), 1), StretchVerdict::invalid);
}

TEST(Extend, SunGrowsToAllThreeOuterVertices) {
  Graph sun = named::sun3();
  StretchedSet s = extend_to_maximal(sun, build_t_stretched(sun, 1));
  EXPECT_EQ(s.members, set({3, 4, 5}));
  EXPECT_EQ(s.at(3).x, set({0, 1}));
  EXPECT_EQ(s.at(4).x, set({1, 2}));
  EXPECT_EQ(s.at(5).x, set({0, 2}));
  EXPECT_TRUE(oracle_maximal(sun, s.members, 1));
}

TEST(Repair, StartsFromGivenSet) {
  ThreePaths ex = three_paths(2, 2, 2, 1);
  StretchedSet s = repair_t_stretched(ex.g, set({ex.a0, ex.b0}), 2);
  EXPECT_EQ(brute_check_stretched(ex.g, s.members, 2), StretchVerdict::valid);
  EXPECT_GE(s.swaps, 1);
}

TEST(BasicProperties, PathAndCycle) {
  Graph p4 = named::path(4);
  auto p = verify_basic_sds(p4, build_t_stretched(p4, 2), 3);
  ASSERT_EQ(p.size(), 5u);
  EXPECT_TRUE(all_hold(p));
  EXPECT_TRUE(p[4].applicable);

  Graph c6 = named::cycle(6);
  auto c = verify_basic_sds(c6, build_t_stretched(c6, 2), chordality_index(c6).k_index);
  EXPECT_TRUE(all_hold(c));
}

TEST(BasicProperties, CenterInBallsAndSeparation) {
  Graph f = named::figure1();
  EXPECT_FALSE(verify_center_in_balls(f, figset({1, 4})).failed());
  StretchedSet s = build_t_stretched(f, 1);
  EXPECT_FALSE(verify_separation(f, s).failed());
}

TEST(Build, SmallGraphsMatchOracle) {
  for_all(5, GraphFilter::connected, [](const Graph& g) {
    const int d = metric_summary(g).diameter;
    for (int t = 1; t <= std::min((d + 1) / 2, d - 1); ++t) {
      StretchedSet s = build_t_stretched(g, t);
      ASSERT_EQ(brute_check_stretched(g, s.members, t), StretchVerdict::valid);
      StretchedSet big = extend_to_maximal(g, s);
      ASSERT_TRUE(s.members.subset_of(big.members));
      ASSERT_EQ(brute_check_stretched(g, big.members, t), StretchVerdict::valid);
      ASSERT_TRUE(oracle_maximal(g, big.members, t));
    }
  });
}
