#include "chordcenter/separators.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "chordcenter/chordality.hpp"

namespace chordcenter {

bool is_separator(const Graph& g, VertexSet s, VertexSet t) {
  g.check_subset(s);
  g.check_subset(t);
  if (t.subset_of(s)) throw GraphError("is_separator: T is contained in S");
  VertexSet rest = t - s;
  return !rest.subset_of(component_of(g, s, rest.front()));
}

bool separates_from(const Graph& g, VertexSet x, Vertex a, VertexSet targets) {
  if (x.contains(a)) throw GraphError("separates_from: source lies in the separator");
  return !component_of(g, x, a).intersects(targets);
}

namespace {

/// Vertex-split unit-capacity network: in(v) = 2v, out(v) = 2v + 1, sink = 2n.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, VertexSet candidates, VertexSet sinks)
      : nodes_(2 * g.order() + 1), cap_(static_cast<std::size_t>(nodes_ * nodes_), 0) {
    const int inf = g.order() + 1;
    for (Vertex v = 0; v < g.order(); ++v) {
      set(in(v), out(v), candidates.contains(v) ? 1 : inf);
      for (Vertex w : g.neighbors(v)) set(out(v), in(w), inf);
      if (sinks.contains(v)) set(out(v), sink(), inf);
    }
  }

  static int in(Vertex v) { return 2 * v; }
  static int out(Vertex v) { return 2 * v + 1; }
  int sink() const { return nodes_ - 1; }

  int max_flow(int source, int limit) {
    int flow = 0;
    while (flow <= limit) {
      std::vector<int> parent(static_cast<std::size_t>(nodes_), -1);
      parent[static_cast<std::size_t>(source)] = source;
      std::deque<int> queue{source};
      while (!queue.empty() && parent[static_cast<std::size_t>(sink())] < 0) {
        int a = queue.front();
        queue.pop_front();
        for (int b = 0; b < nodes_; ++b) {
          if (parent[static_cast<std::size_t>(b)] < 0 && cap(a, b) > 0) {
            parent[static_cast<std::size_t>(b)] = a;
            queue.push_back(b);
          }
        }
      }
      if (parent[static_cast<std::size_t>(sink())] < 0) break;
      // Unit bottleneck: every augmenting path crosses at least one
      // candidate, or the flow is unbounded and we stop at `limit`.
      int bottleneck = limit + 1;
      for (int b = sink(); b != source; b = parent[static_cast<std::size_t>(b)]) {
        bottleneck = std::min(bottleneck, cap(parent[static_cast<std::size_t>(b)], b));
      }
      for (int b = sink(); b != source; b = parent[static_cast<std::size_t>(b)]) {
        int a = parent[static_cast<std::size_t>(b)];
        cap_[idx(a, b)] -= bottleneck;
        cap_[idx(b, a)] += bottleneck;
      }
      flow += bottleneck;
    }
    return flow;
  }

  std::vector<bool> residual_reach(int source) const {
    std::vector<bool> seen(static_cast<std::size_t>(nodes_), false);
    seen[static_cast<std::size_t>(source)] = true;
    std::deque<int> queue{source};
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < nodes_; ++b) {
        if (!seen[static_cast<std::size_t>(b)] && cap(a, b) > 0) {
          seen[static_cast<std::size_t>(b)] = true;
          queue.push_back(b);
        }
      }
    }
    return seen;
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * nodes_ + b); }
  int cap(int a, int b) const { return cap_[idx(a, b)]; }
  void set(int a, int b, int c) { cap_[idx(a, b)] = c; }

  int nodes_;
  std::vector<int> cap_;
};

}  // namespace

std::optional<VertexSet> min_vertex_cut(const Graph& g, Vertex source, VertexSet sinks,
                                        VertexSet candidates) {
  g.check_vertex(source);
  g.check_subset(sinks);
  g.check_subset(candidates);
  if (sinks.empty()) throw GraphError("min_vertex_cut: no sink vertices");
  if (sinks.contains(source)) throw GraphError("min_vertex_cut: source is also a sink");
  candidates -= sinks;
  candidates.erase(source);

  SplitNetwork net(g, candidates, sinks);
  const int limit = candidates.size();
  const int flow = net.max_flow(SplitNetwork::out(source), limit);
  if (flow > limit) return std::nullopt;

  std::vector<bool> reach = net.residual_reach(SplitNetwork::out(source));
  VertexSet cut;
  for (Vertex v : candidates) {
    if (reach[static_cast<std::size_t>(SplitNetwork::in(v))] &&
        !reach[static_cast<std::size_t>(SplitNetwork::out(v))]) {
      cut.insert(v);
    }
  }
  return cut;
}

ConstrainedSeparator bind_separator(const Graph& g, Vertex u, VertexSet others, int t,
                                    VertexSet x) {
  ConstrainedSeparator cs{u, others, t, x, component_of(g, x, u), {}};
  for (VertexSet part : components_after_removal(g, x)) {
    if (part.intersects(others)) cs.w_rest |= part;
  }
  return cs;
}

std::optional<ConstrainedSeparator> min_separator_within(const Graph& g, const DistanceMatrix& dm,
                                                         Vertex u, VertexSet others, int t) {
  g.check_vertex(u);
  g.check_subset(others);
  if (!dm.connected()) throw SeparatorPrecondition("min_separator_within: graph not connected");
  if (t < 1) throw SeparatorPrecondition("min_separator_within: t must be positive");
  if (others.empty()) throw SeparatorPrecondition("min_separator_within: empty target set");
  for (Vertex v : others) {
    if (dm.hops(u, v) <= t) {
      throw SeparatorPrecondition("min_separator_within: d(" + std::to_string(u) + "," +
                                  std::to_string(v) + ") <= t");
    }
  }
  std::optional<VertexSet> cut = min_vertex_cut(g, u, others, dm.ring(VertexSet::single(u), t));
  if (!cut) return std::nullopt;
  return bind_separator(g, u, others, t, *cut);
}

std::optional<ConstrainedSeparator> min_separator_within(const Graph& g, Vertex u,
                                                         VertexSet others, int t) {
  return min_separator_within(g, DistanceMatrix(g), u, others, t);
}

std::vector<VertexSet> minimal_separators(const Graph& g) {
  // Berry-Bordat-Cogis closure: seeds N(C) for components C of G - N[a],
  // then N(C) for components C of G - (S u N(x)), x in S.
  auto compare = [](VertexSet a, VertexSet b) { return lex_less(a, b); };
  std::set<VertexSet, decltype(compare)> found(compare);
  std::deque<VertexSet> pending;
  auto harvest = [&](VertexSet removed) {
    for (VertexSet part : components_after_removal(g, removed)) {
      VertexSet boundary = g.neighbors(part);
      if (!boundary.empty() && found.insert(boundary).second) pending.push_back(boundary);
    }
  };
  for (Vertex a = 0; a < g.order(); ++a) harvest(g.closed_neighbors(VertexSet::single(a)));
  while (!pending.empty()) {
    VertexSet s = pending.front();
    pending.pop_front();
    for (Vertex x : s) harvest(s | g.neighbors(x));
  }

  std::vector<VertexSet> out;
  for (VertexSet s : found) {
    int full = 0;
    for (VertexSet part : components_after_removal(g, s)) {
      if (g.neighbors(part) == s) ++full;
    }
    if (full >= 2) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> minimal_separators_chordal(const Graph& g) {
  if (!is_connected(g)) throw GraphError("minimal_separators_chordal: graph not connected");
  if (!is_chordal(g)) throw GraphError("minimal_separators_chordal: graph is not chordal");
  std::vector<VertexSet> all = minimal_separators(g);
  std::vector<VertexSet> out;
  for (VertexSet s : all) {
    bool has_smaller = std::any_of(all.begin(), all.end(), [s](VertexSet o) {
      return o != s && o.subset_of(s);
    });
    if (has_smaller) continue;
    if (!is_clique(g, s)) {
      throw GraphError("minimal separator " + to_string(s) + " of a chordal graph is not a clique");
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace chordcenter
