#include "chordcenter/graph.hpp"

#include <algorithm>
#include <sstream>

namespace chordcenter {

std::string to_string(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

Graph::Graph(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError("graph order must be in [1, 64], got " + std::to_string(n));
  }
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order()));
  }
}

void Graph::check_subset(VertexSet s) const {
  if (!s.subset_of(vertices())) {
    throw GraphError("vertex set " + to_string(s) + " not within graph of order " +
                     std::to_string(order()));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)].insert(v);
  adj_[static_cast<std::size_t>(v)].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)].erase(v);
  adj_[static_cast<std::size_t>(v)].erase(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet a : adj_) twice += a.size();
  return twice / 2;
}

VertexSet Graph::neighbors(VertexSet s) const {
  VertexSet out;
  for (Vertex v : s) out |= adj_[static_cast<std::size_t>(v)];
  return out - s;
}

int Graph::max_degree() const {
  int best = 0;
  for (VertexSet a : adj_) best = std::max(best, a.size());
  return best;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet DistanceTable::reachable() const {
  VertexSet out;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v]) out.insert(static_cast<Vertex>(v));
  }
  return out;
}

DistanceTable bfs_from(const Graph& g, VertexSet sources) {
  if (sources.empty()) throw GraphError("bfs_from: empty source set");
  g.check_subset(sources);
  DistanceTable table{sources, std::vector<Distance>(static_cast<std::size_t>(g.order()))};
  VertexSet seen = sources;
  VertexSet frontier = sources;
  for (int level = 0; !frontier.empty(); ++level) {
    for (Vertex v : frontier) table.dist[static_cast<std::size_t>(v)] = level;
    VertexSet next = g.neighbors(frontier) - seen;
    seen |= next;
    frontier = next;
  }
  return table;
}

VertexSet neighborhood_at(const Graph& g, VertexSet s, int t) {
  DistanceTable table = bfs_from(g, s);
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (table[v] == t) out.insert(v);
  }
  return out;
}

VertexSet neighborhood_within(const Graph& g, VertexSet s, int t) {
  DistanceTable table = bfs_from(g, s);
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (table[v] && *table[v] <= t) out.insert(v);
  }
  return out;
}

VertexSet component_of(const Graph& g, VertexSet removed, Vertex v) {
  if (removed.contains(v)) return {};
  VertexSet allowed = g.vertices() - removed;
  VertexSet seen = VertexSet::single(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next = (g.neighbors(frontier) & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components_after_removal(const Graph& g, VertexSet removed) {
  g.check_subset(removed);
  std::vector<VertexSet> parts;
  VertexSet left = g.vertices() - removed;
  while (!left.empty()) {
    VertexSet part = component_of(g, removed, left.front());
    parts.push_back(part);
    left -= part;
  }
  return parts;
}

bool is_connected(const Graph& g) { return component_of(g, {}, 0) == g.vertices(); }

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()), d_(static_cast<std::size_t>(n_ * n_)) {
  for (Vertex s = 0; s < n_; ++s) {
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    for (int level = 0; !frontier.empty(); ++level) {
      for (Vertex v : frontier) d_[static_cast<std::size_t>(s * n_ + v)] = level;
      VertexSet next = g.neighbors(frontier) - seen;
      seen |= next;
      frontier = next;
    }
    if (seen.size() != n_) connected_ = false;
  }
}

int DistanceMatrix::hops(Vertex u, Vertex v) const {
  Distance d = at(u, v);
  if (!d) {
    throw GraphError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                     " are not connected");
  }
  return *d;
}

Distance DistanceMatrix::to_set(Vertex u, VertexSet s) const {
  Distance best;
  for (Vertex v : s) {
    Distance d = at(u, v);
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

Distance DistanceMatrix::between(VertexSet a, VertexSet b) const {
  Distance best;
  for (Vertex u : a) {
    Distance d = to_set(u, b);
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

VertexSet DistanceMatrix::ring(VertexSet s, int t) const {
  VertexSet out;
  for (Vertex v = 0; v < n_; ++v) {
    if (to_set(v, s) == t) out.insert(v);
  }
  return out;
}

VertexSet DistanceMatrix::ball(VertexSet s, int t) const {
  VertexSet out;
  for (Vertex v = 0; v < n_; ++v) {
    Distance d = to_set(v, s);
    if (d && *d <= t) out.insert(v);
  }
  return out;
}

VertexSet InducedSubgraph::lift(VertexSet local) const {
  VertexSet out;
  for (Vertex v : local) out.insert(to_parent[static_cast<std::size_t>(v)]);
  return out;
}

VertexSet InducedSubgraph::project(VertexSet parent) const {
  VertexSet out;
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    if (parent.contains(to_parent[i])) out.insert(static_cast<Vertex>(i));
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw GraphError("induced_subgraph: empty vertex set");
  g.check_subset(s);
  std::vector<Vertex> to_parent = s.to_vector();
  Graph h(static_cast<int>(to_parent.size()));
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    for (std::size_t j = i + 1; j < to_parent.size(); ++j) {
      if (g.adjacent(to_parent[i], to_parent[j])) {
        h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return {std::move(h), std::move(to_parent)};
}

namespace named {

Graph path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph sun3() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
}

Graph figure1() {
  // Labels 1..9 map to indices 0..8.
  const std::vector<std::pair<int, int>> labelled = {
      {7, 6}, {7, 8}, {6, 8}, {5, 9}, {5, 8}, {5, 6}, {5, 3}, {5, 2},
      {5, 1}, {1, 2}, {2, 3}, {3, 9}, {3, 8}, {3, 4}, {4, 9}, {9, 8}};
  Graph g(9);
  for (auto [a, b] : labelled) g.add_edge(a - 1, b - 1);
  return g;
}

std::vector<std::string> figure1_labels() {
  std::vector<std::string> labels;
  for (int i = 1; i <= 9; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace named

}  // namespace chordcenter
