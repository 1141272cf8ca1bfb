#include <gtest/gtest.h>

#include "chordcenter/graph.hpp"
#include "chordcenter/oracle.hpp"
#include "support.hpp"

using namespace chordcenter;
using namespace testing_support;

TEST(VertexSet, BasicOperations) {
  VertexSet s{0, 2, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.front(), 0);
  EXPECT_EQ(to_string(s), "{0,2,5}");
  EXPECT_EQ((s - VertexSet{2}).to_vector(), (std::vector<Vertex>{0, 5}));
  EXPECT_TRUE(VertexSet({2, 5}).subset_of(s));
  EXPECT_EQ(VertexSet::range(64).size(), 64);
  VertexSet top;
  top.insert(63);
  EXPECT_EQ(top.front(), 63);
  EXPECT_TRUE(lex_less(VertexSet{0, 3}, VertexSet{1}));
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(0), GraphError);
  EXPECT_THROW(Graph(65), GraphError);
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), GraphError);
  EXPECT_THROW(g.add_edge(0, 3), GraphError);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, NeighbourhoodsAndDegree) {
  Graph g = named::path(4);
  EXPECT_EQ(g.neighbors(1), set({0, 2}));
  EXPECT_EQ(g.neighbors(set({1, 2})), set({0, 3}));
  EXPECT_EQ(g.closed_neighbors(set({0})), set({0, 1}));
  EXPECT_EQ(g.max_degree(), 2);
}

TEST(Bfs, PathFromEnd) {
  DistanceTable d = bfs_from(named::path(4), set({0}));
  ASSERT_EQ(d.dist.size(), 4u);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(d[v], v);
}

TEST(Bfs, CompleteGraph) {
  DistanceTable d = bfs_from(named::complete(3), set({0}));
  EXPECT_EQ(d[0], 0);
  EXPECT_EQ(d[1], 1);
  EXPECT_EQ(d[2], 1);
}

TEST(Bfs, FixtureMatchesAllPairsOracle) {
  Graph g = named::figure1();
  auto brute = brute_distances(g);
  DistanceTable d = bfs_from(g, set({fig(1)}));
  for (int label : {4, 7, 3}) {
    EXPECT_EQ(*d[fig(label)], brute[fig(1)][static_cast<std::size_t>(fig(label))]) << label;
  }
  EXPECT_EQ(d[fig(4)], 3);
  EXPECT_EQ(d[fig(7)], 3);
  EXPECT_EQ(d[fig(3)], 2);
}

TEST(Bfs, UnreachableIsExplicit) {
  Graph g(3);
  g.add_edge(0, 1);
  DistanceTable d = bfs_from(g, set({0}));
  EXPECT_FALSE(d[2].has_value());
  EXPECT_EQ(d.reachable(), set({0, 1}));
}

TEST(Bfs, RejectsEmptySourceAndBadIndex) {
  Graph g = named::path(3);
  EXPECT_THROW(bfs_from(g, VertexSet{}), GraphError);
  EXPECT_THROW(bfs_from(g, set({5})), GraphError);
}

TEST(Neighborhood, Examples) {
  EXPECT_EQ(neighborhood_at(named::path(4), set({0}), 2), set({2}));
  Graph f = named::figure1();
  EXPECT_EQ(neighborhood_at(f, set({fig(1)}), 2), figset({3, 6, 8, 9}));
  EXPECT_EQ(neighborhood_at(f, figset({2, 7}), 0), figset({2, 7}));
  EXPECT_EQ(neighborhood_within(f, set({fig(1)}), 1), figset({1, 2, 5}));
}

TEST(Components, Examples) {
  Graph p4 = named::path(4);
  EXPECT_EQ(components_after_removal(p4, set({1})), (std::vector<VertexSet>{set({0}), set({2, 3})}));
  EXPECT_EQ(components_after_removal(p4, {}), (std::vector<VertexSet>{set({0, 1, 2, 3})}));
  Graph f = named::figure1();
  auto parts = components_after_removal(f, figset({3, 9}));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(component_of(f, figset({3, 9}), fig(4)), figset({4}));
  EXPECT_EQ(component_of(f, figset({3, 9}), fig(1)), figset({1, 2, 5, 6, 7, 8}));
}

TEST(InducedSubgraph, Examples) {
  InducedSubgraph k2 = induced_subgraph(named::complete(4), set({0, 1}));
  EXPECT_EQ(k2.graph, named::complete(2));
  InducedSubgraph two = induced_subgraph(named::path(4), set({0, 2}));
  EXPECT_EQ(two.graph.order(), 2);
  EXPECT_EQ(two.graph.edge_count(), 0);
  EXPECT_EQ(two.lift(set({1})), set({2}));
  InducedSubgraph k4 = induced_subgraph(named::figure1(), figset({3, 5, 8, 9}));
  EXPECT_EQ(k4.graph, named::complete(4));
  EXPECT_THROW(induced_subgraph(named::path(3), VertexSet{}), GraphError);
}

TEST(InducedSubgraph, IdempotentOnFullVertexSet) {
  Graph f = named::figure1();
  EXPECT_EQ(induced_subgraph(f, f.vertices()).graph, f);
}

TEST(DistanceMatrix, MatchesFloydOnAllSmallGraphs) {
  for_all(5, GraphFilter::all, [](const Graph& g) {
    DistanceMatrix dm(g);
    auto brute = brute_distances(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = 0; v < g.order(); ++v) {
        int b = brute[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        Distance d = dm.at(u, v);
        ASSERT_EQ(d.has_value(), b >= 0);
        if (d) ASSERT_EQ(*d, b);
      }
    }
  });
}

TEST(NamedGraphs, FixtureEdgeList) {
  Graph f = named::figure1();
  EXPECT_EQ(f.order(), 9);
  EXPECT_EQ(f.edge_count(), 16);
  for (auto [a, b] : std::vector<std::pair<int, int>>{
           {7, 6}, {7, 8}, {6, 8}, {5, 9}, {5, 8}, {5, 6}, {5, 3}, {5, 2},
           {5, 1}, {1, 2}, {2, 3}, {3, 9}, {3, 8}, {3, 4}, {4, 9}, {9, 8}}) {
    EXPECT_TRUE(f.adjacent(fig(a), fig(b))) << a << "-" << b;
  }
  EXPECT_EQ(named::figure1_labels().front(), "1");
}
