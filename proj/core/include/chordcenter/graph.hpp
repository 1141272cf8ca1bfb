#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chordcenter/vertex_set.hpp"

namespace chordcenter {

/// Thrown for malformed graphs, bad vertex indices and unmet preconditions.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  /// Adds uv; adding an existing edge is a no-op. Self-loops are rejected.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  /// N(S): vertices adjacent to some member of S, S itself excluded.
  VertexSet neighbors(VertexSet s) const;
  /// N[S]
  VertexSet closed_neighbors(VertexSet s) const { return neighbors(s) | s; }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
  int degree(Vertex v) const { return neighbors(v).size(); }
  int max_degree() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  void check_vertex(Vertex v) const;
  void check_subset(VertexSet s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

/// Graph distance; nullopt means unreachable.
using Distance = std::optional<int>;

/// Distances from a source set.
struct DistanceTable {
  VertexSet sources;
  std::vector<Distance> dist;

  Distance operator[](Vertex v) const { return dist[static_cast<std::size_t>(v)]; }
  VertexSet reachable() const;
};

/// All-pairs distances, one BFS per vertex.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  Distance at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u * n_ + v)]; }
  /// Distance on a graph known to be connected; throws GraphError otherwise.
  int hops(Vertex u, Vertex v) const;
  /// d(u, S) = min over s in S; nullopt when S is empty or unreachable.
  Distance to_set(Vertex u, VertexSet s) const;
  Distance between(VertexSet a, VertexSet b) const;
  /// Vertices at exactly distance t from S.
  VertexSet ring(VertexSet s, int t) const;
  /// Vertices within distance t of S.
  VertexSet ball(VertexSet s, int t) const;
  bool connected() const { return connected_; }

 private:
  int n_;
  bool connected_ = true;
  std::vector<Distance> d_;
};

DistanceTable bfs_from(const Graph& g, VertexSet sources);

/// N(S, t) = {y | d(y, S) = t}.
VertexSet neighborhood_at(const Graph& g, VertexSet s, int t);
/// N_<=(S, t) = {y | d(y, S) <= t}.
VertexSet neighborhood_within(const Graph& g, VertexSet s, int t);

/// Connected components of G - X, ordered by smallest member.
std::vector<VertexSet> components_after_removal(const Graph& g, VertexSet removed);
/// The component of G - X containing v (empty if v is in X).
VertexSet component_of(const Graph& g, VertexSet removed, Vertex v);
bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[i] is the parent vertex of local vertex i (ascending).
  std::vector<Vertex> to_parent;

  VertexSet lift(VertexSet local) const;
  /// Parent vertex set restricted to the subgraph, in local indices.
  VertexSet project(VertexSet parent) const;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// Named small graphs used by tests, benchmarks and the CLI.
namespace named {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
/// Triangle x1x2x3 (0,1,2) with y_i (3,4,5) adjacent to x_i and x_{i+1}.
Graph sun3();
/// The nine-vertex chordal counterexample; vertex i carries label i+1.
Graph figure1();
std::vector<std::string> figure1_labels();
}  // namespace named

}  // namespace chordcenter
