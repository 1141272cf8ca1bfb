#include "chordcenter/construct.hpp"

#include <numeric>

#include "chordcenter/characterize.hpp"
#include "chordcenter/chordality.hpp"
#include "chordcenter/metrics.hpp"

namespace chordcenter {

VertexSet HostGraph::embedded() const { return VertexSet::from_vector(embedding); }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError("precondition violated: " + what);
}

void require_room(const Graph& g, int extra) {
  require(g.order() + extra <= kMaxVertices,
          "host would exceed " + std::to_string(kMaxVertices) + " vertices");
}

Clause check(std::string name, bool holds, std::string evidence = {}) {
  Clause c{std::move(name)};
  c.holds = holds;
  if (!holds) c.evidence = std::move(evidence);
  return c;
}

HostGraph start(const Graph& g, int extra, std::string construction) {
  HostGraph h;
  h.host = Graph(g.order() + extra);
  for (const auto& [a, b] : g.edges()) h.host.add_edge(a, b);
  h.embedding.resize(static_cast<std::size_t>(g.order()));
  std::iota(h.embedding.begin(), h.embedding.end(), 0);
  h.construction = std::move(construction);
  return h;
}

void attach(HostGraph& h, std::string name, Vertex index, VertexSet to) {
  for (Vertex v : to) h.host.add_edge(index, v);
  h.added.push_back({std::move(name), index, to});
}

std::string ecc_evidence(Vertex v, int got) {
  return "ecc(" + std::to_string(v) + ")=" + std::to_string(got);
}

void finish(HostGraph& h, const MetricSummary& m) {
  h.checks.push_back(check("C(host) = embedded vertices", m.center == h.embedded(),
                           "C(host)=" + to_string(m.center)));
  h.verified = all_hold(h.checks);
}

}  // namespace

HostGraph host_pendant(const Graph& g) {
  require(is_connected(g), "graph connected");
  require(is_chordal(g), "graph chordal");
  MetricSummary m = metric_summary(g);
  require(m.diameter <= 3, "Diam <= 3");
  require(is_connected(induced_subgraph(g, m.center).graph) &&
              induced_radius_diameter(g, m.center).radius == 2,
          "Rad(<C>) = 2");

  VertexSet a;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (m.ecc[static_cast<std::size_t>(v)] == 2) a.insert(v);
  }
  require_room(g, a.size());
  HostGraph h = start(g, a.size(), "pendant");
  Vertex next = g.order();
  for (Vertex v : a) attach(h, "w_" + std::to_string(v), next++, VertexSet::single(v));

  MetricSummary hm = metric_summary(h.host);
  auto ecc = [&](Vertex v) { return hm.ecc[static_cast<std::size_t>(v)]; };
  Clause in_a{"ecc(a) = 3 for a in A"};
  Clause out_a{"ecc(b) = 3 for b not in A"};
  for (Vertex v = 0; v < g.order(); ++v) {
    Clause& c = a.contains(v) ? in_a : out_a;
    if (ecc(v) != 3 && c.holds) {
      c.holds = false;
      c.evidence = ecc_evidence(v, ecc(v));
    }
  }
  Clause pendants{"ecc(w) = 4 for every added w"};
  for (const AddedVertex& w : h.added) {
    if (ecc(w.index) != 4 && pendants.holds) {
      pendants.holds = false;
      pendants.evidence = ecc_evidence(w.index, ecc(w.index));
    }
  }
  h.checks = {in_a, out_a, pendants, check("host chordal", is_chordal(h.host))};
  finish(h, hm);
  return h;
}

HostGraph host_two_cliques(const Graph& g, VertexSet k1, VertexSet k2) {
  g.check_subset(k1);
  g.check_subset(k2);
  require(is_connected(g), "graph connected");
  require(is_chordal(g), "graph chordal");
  require(metric_summary(g).diameter <= 3, "Diam <= 3");
  require(!k1.empty() && !k2.empty(), "cliques nonempty");
  require(!k1.intersects(k2), "cliques disjoint");
  require(is_clique(g, k1) && is_clique(g, k2), "K1 and K2 are cliques");
  require(dominates(g, k1), "K1 dominates the graph");
  require(dominates(g, k2), "K2 dominates the graph");
  require_room(g, 4);

  const Vertex n = g.order();
  const Vertex w1 = n, w1p = n + 1, w2 = n + 2, w2p = n + 3;
  HostGraph h = start(g, 4, "two-cliques");
  attach(h, "w_1", w1, k1);
  attach(h, "w_1'", w1p, VertexSet::single(w1));
  attach(h, "w_2", w2, k2);
  attach(h, "w_2'", w2p, VertexSet::single(w2));

  MetricSummary hm = metric_summary(h.host);
  DistanceMatrix dm(h.host);
  Clause inner{"ecc(y) = 3 for y in V(G)"};
  for (Vertex v = 0; v < n; ++v) {
    int e = hm.ecc[static_cast<std::size_t>(v)];
    if (e != 3 && inner.holds) {
      inner.holds = false;
      inner.evidence = ecc_evidence(v, e);
    }
  }
  const int d12 = dm.hops(w1, w2p);
  const int d1p2p = dm.hops(w1p, w2p);
  h.checks = {
      inner,
      check("d(w_1, w_2') = 4", d12 == 4, std::to_string(d12)),
      check("d(w_1', w_2') = 5", d1p2p == 5, std::to_string(d1p2p)),
      check("Rad(host) = 3", hm.radius == 3, std::to_string(hm.radius)),
      check("Diam(host) = 5", hm.diameter == 5, std::to_string(hm.diameter)),
      check("host chordal", is_chordal(h.host)),
  };
  finish(h, hm);
  return h;
}

HostGraph host_kchordal(const Graph& g, int k) {
  require(k >= 4, "k >= 4");
  const int k_index = chordality_index(g).k_index;
  require(k_index <= k, "graph is " + std::to_string(k) + "-chordal");
  require_room(g, 4);

  const Vertex n = g.order();
  HostGraph h = start(g, 4, "k-chordal");
  attach(h, "w_u", n, g.vertices());
  attach(h, "w_v", n + 1, g.vertices());
  attach(h, "u", n + 2, VertexSet::single(n));
  attach(h, "v", n + 3, VertexSet::single(n + 1));

  const int host_k = chordality_index(h.host).k_index;
  h.checks = {check("chordality index of host <= k", host_k <= k, std::to_string(host_k))};
  finish(h, metric_summary(h.host));
  return h;
}

HostGraph build_host(const Graph& g) {
  CenterCertificate cert = is_center_of_chordal(g);
  if (!cert.verdict) {
    throw ConstructionError("not the center of a chordal graph: " + to_string(cert.reason));
  }
  if (cert.cliques) return host_two_cliques(g, cert.cliques->first, cert.cliques->second);
  return host_pendant(g);
}

}  // namespace chordcenter
