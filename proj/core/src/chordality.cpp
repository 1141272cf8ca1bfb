#include "chordcenter/chordality.hpp"

namespace chordcenter {

std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> visit;
  VertexSet unvisited = g.vertices();
  while (!unvisited.empty()) {
    Vertex pick = unvisited.front();
    for (Vertex v : unvisited) {
      if (weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) pick = v;
    }
    visit.push_back(pick);
    unvisited.erase(pick);
    for (Vertex w : g.neighbors(pick) & unvisited) ++weight[static_cast<std::size_t>(w)];
  }

  std::vector<Vertex> order(visit.rbegin(), visit.rend());
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  for (int i = 0; i < n; ++i) {
    Vertex v = order[static_cast<std::size_t>(i)];
    VertexSet later;
    for (Vertex w : g.neighbors(v)) {
      if (position[static_cast<std::size_t>(w)] > i) later.insert(w);
    }
    if (later.empty()) continue;
    Vertex parent = later.front();
    for (Vertex w : later) {
      if (position[static_cast<std::size_t>(w)] < position[static_cast<std::size_t>(parent)]) {
        parent = w;
      }
    }
    later.erase(parent);
    if (!later.subset_of(g.neighbors(parent))) return std::nullopt;
  }
  return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

namespace {

struct HoleSearch {
  const Graph& g;
  Vertex start = 0;
  std::vector<Vertex> path;
  VertexSet on_path;
  std::vector<Vertex> best;

  void extend() {
    const Vertex last = path.back();
    VertexSet allowed = g.vertices() - VertexSet::range(start + 1) - on_path;
    VertexSet inner = on_path;
    inner.erase(start);
    inner.erase(last);
    for (Vertex v : g.neighbors(last) & allowed) {
      if (path.size() >= 2 && g.neighbors(v).intersects(inner)) continue;
      if (path.size() >= 2 && g.adjacent(v, start)) {
        // Closing edge; length path.size() + 1. Each hole is seen in two
        // directions, keep the one whose second vertex is smaller.
        if (path.size() >= 3 && path[1] < v && path.size() + 1 > best.size()) {
          best = path;
          best.push_back(v);
        }
        continue;
      }
      path.push_back(v);
      on_path.insert(v);
      extend();
      on_path.erase(v);
      path.pop_back();
    }
  }
};

}  // namespace

std::optional<std::vector<Vertex>> longest_hole(const Graph& g) {
  HoleSearch search{g};
  for (Vertex s = 0; s < g.order(); ++s) {
    search.start = s;
    search.path = {s};
    search.on_path = VertexSet::single(s);
    search.extend();
  }
  if (search.best.empty()) return std::nullopt;
  return search.best;
}

ChordalityReport chordality_index(const Graph& g) {
  ChordalityReport report;
  report.peo = perfect_elimination_order(g);
  report.is_chordal = report.peo.has_value();
  if (report.is_chordal) return report;
  report.witness_cycle = longest_hole(g);
  if (!report.witness_cycle) {
    throw GraphError("internal: non-chordal graph without an induced cycle of length >= 4");
  }
  report.k_index = static_cast<int>(report.witness_cycle->size());
  return report;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s) {
    VertexSet others = s;
    others.erase(v);
    if (!others.subset_of(g.neighbors(v))) return false;
  }
  return true;
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_clique(g, g.neighbors(v))) out.insert(v);
  }
  return out;
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty()) {
    if (x.empty()) out.push_back(r);
    return;
  }
  Vertex pivot = (p | x).front();
  int best = -1;
  for (Vertex v : p | x) {
    int cover = (g.neighbors(v) & p).size();
    if (cover > best) {
      best = cover;
      pivot = v;
    }
  }
  for (Vertex v : p - g.neighbors(pivot)) {
    VertexSet nv = g.neighbors(v);
    bron_kerbosch(g, r | VertexSet::single(v), p & nv, x & nv, out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g, VertexSet within) {
  g.check_subset(within);
  std::vector<VertexSet> out;
  bron_kerbosch(g, {}, within, {}, out);
  return out;
}

}  // namespace chordcenter
