#include <gtest/gtest.h>

#include <set>

#include "chordcenter/chordality.hpp"
#include "chordcenter/oracle.hpp"
#include "support.hpp"

using namespace chordcenter;
using namespace testing_support;

namespace {

std::size_t count(int n, GraphFilter f, Dedup d) {
  std::size_t c = 0;
  EnumerationStream s(n, f, d);
  while (s.next()) ++c;
  return c;
}

}  // namespace

TEST(Enumeration, SmallCounts) {
  EXPECT_EQ(count(1, GraphFilter::all, Dedup::none), 1u);
  EXPECT_EQ(count(3, GraphFilter::connected, Dedup::none), 4u);
  EXPECT_EQ(count(4, GraphFilter::connected, Dedup::canonical), 6u);
}

// Published sequences: labelled connected graphs, unlabelled graphs,
// unlabelled connected graphs, unlabelled connected chordal graphs.
TEST(Enumeration, KnownSequences) {
  const std::vector<std::size_t> labelled_connected{1, 1, 4, 38, 728, 26704};
  const std::vector<std::size_t> unlabelled{1, 2, 4, 11, 34, 156};
  const std::vector<std::size_t> unlabelled_connected{1, 1, 2, 6, 21, 112};
  const std::vector<std::size_t> unlabelled_chordal{1, 1, 2, 5, 15, 58};
  for (int n = 1; n <= 6; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    EXPECT_EQ(count(n, GraphFilter::connected, Dedup::none), labelled_connected[i]) << n;
    EXPECT_EQ(count(n, GraphFilter::all, Dedup::canonical), unlabelled[i]) << n;
    EXPECT_EQ(count(n, GraphFilter::connected, Dedup::canonical), unlabelled_connected[i]) << n;
    EXPECT_EQ(count(n, GraphFilter::connected_chordal, Dedup::canonical), unlabelled_chordal[i]) << n;
  }
}

TEST(Enumeration, Unlabelled7) {
  EXPECT_EQ(count(7, GraphFilter::all, Dedup::canonical), 1044u);
  EXPECT_EQ(count(7, GraphFilter::connected_chordal, Dedup::canonical), 272u);
}

TEST(Enumeration, EachLabelledGraphOnce) {
  std::set<std::uint64_t> seen;
  EnumerationStream s(4, GraphFilter::all, Dedup::none);
  while (auto g = s.next()) ASSERT_TRUE(seen.insert(code_of(*g)).second);
  EXPECT_EQ(seen.size(), 64u);
}

TEST(Enumeration, CodesRoundTrip) {
  for (std::uint64_t code = 0; code < 1024; ++code) {
    ASSERT_EQ(code_of(graph_from_code(5, code)), code);
  }
  EXPECT_EQ(slot_count(4), 6);
}

TEST(Enumeration, CanonicalCodeIsInvariant) {
  Graph f = named::sun3();
  f.add_edge(3, 4);
  Graph shuffled(6);
  const std::vector<Vertex> perm{4, 0, 5, 2, 1, 3};
  for (auto [a, b] : f.edges()) {
    shuffled.add_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  }
  EXPECT_EQ(canonical_code(f), canonical_code(shuffled));
  EXPECT_NE(canonical_code(f), canonical_code(named::sun3()));
  EXPECT_THROW(canonical_code(named::figure1()), BudgetExceeded);
}

TEST(Enumeration, FilterAndBudget) {
  EnumerationStream s(5, GraphFilter::connected_chordal, Dedup::none);
  while (auto g = s.next()) {
    ASSERT_TRUE(is_connected(*g));
    ASSERT_TRUE(is_chordal(*g));
  }
  EXPECT_THROW(EnumerationStream(kMaxLabelledOrder + 1, GraphFilter::all, Dedup::none),
               BudgetExceeded);
}

TEST(Enumeration, ParallelVisitsEveryGraph) {
  std::atomic<int> seen{0};
  for_each_graph(5, GraphFilter::connected, 3, [&](const Graph&) { ++seen; });
  EXPECT_EQ(seen.load(), 728);
}

TEST(InducedCycleOracle, Examples) {
  EXPECT_EQ(brute_longest_induced_cycle(named::cycle(6)).length, 6);
  EXPECT_EQ(brute_longest_induced_cycle(named::complete(4)).length, 3);
  EXPECT_EQ(brute_longest_induced_cycle(named::figure1()).length, 3);
}

TEST(SeparatorOracle, FixtureAtDistanceTwo) {
  EXPECT_EQ(brute_min_separator(named::figure1(), fig(1), figset({4}), figset({3, 6, 8, 9})),
            figset({3, 9}));
}

TEST(StretchOracle, Examples) {
  EXPECT_EQ(brute_check_stretched(named::path(4), set({0, 3}), 2), StretchVerdict::valid);
  ThreePaths ex = three_paths(2, 2, 2, 1);
  EXPECT_EQ(brute_check_stretched(ex.g, set({ex.a0, ex.b0}), 2), StretchVerdict::invalid);
  EXPECT_EQ(brute_check_stretched(ex.g, set({ex.a0, ex.c0}), 2), StretchVerdict::valid);
  EXPECT_EQ(brute_check_stretched(named::complete(3), set({0, 1}), 1),
            StretchVerdict::not_applicable);
}
