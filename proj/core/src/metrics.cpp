#include "chordcenter/metrics.hpp"

#include <algorithm>

namespace chordcenter {

namespace {

void require_connected(const DistanceMatrix& dm, const char* what) {
  if (!dm.connected()) throw GraphError(std::string(what) + ": graph is not connected");
}

}  // namespace

std::vector<int> eccentricities(const DistanceMatrix& dm) {
  require_connected(dm, "eccentricities");
  std::vector<int> ecc(static_cast<std::size_t>(dm.order()), 0);
  for (Vertex u = 0; u < dm.order(); ++u) {
    for (Vertex v = 0; v < dm.order(); ++v) {
      ecc[static_cast<std::size_t>(u)] = std::max(ecc[static_cast<std::size_t>(u)], *dm.at(u, v));
    }
  }
  return ecc;
}

VertexSet center_of(const Graph& g) {
  std::vector<int> ecc = eccentricities(DistanceMatrix(g));
  int radius = *std::min_element(ecc.begin(), ecc.end());
  VertexSet center;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (ecc[static_cast<std::size_t>(v)] == radius) center.insert(v);
  }
  return center;
}

VertexSet MetricSummary::center_power(int i) const {
  auto idx = std::min<std::size_t>(static_cast<std::size_t>(i), iterated_centers.size() - 1);
  return iterated_centers[idx];
}

MetricSummary metric_summary(const Graph& g) {
  DistanceMatrix dm(g);
  MetricSummary out;
  out.ecc = eccentricities(dm);
  out.radius = *std::min_element(out.ecc.begin(), out.ecc.end());
  out.diameter = *std::max_element(out.ecc.begin(), out.ecc.end());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (out.ecc[static_cast<std::size_t>(v)] == out.radius) out.center.insert(v);
  }

  out.iterated_centers.push_back(g.vertices());
  VertexSet current = out.center;
  while (true) {
    out.iterated_centers.push_back(current);
    if (current == out.iterated_centers[out.iterated_centers.size() - 2]) break;
    InducedSubgraph sub = induced_subgraph(g, current);
    // <C^{i-1}> can be disconnected for non-chordal graphs; the chain then
    // stops since the center of a disconnected graph is undefined.
    if (!is_connected(sub.graph)) break;
    current = sub.lift(center_of(sub.graph));
  }
  return out;
}

bool is_self_centered(const Graph& g) {
  MetricSummary m = metric_summary(g);
  return m.radius == m.diameter;
}

bool is_diametrical(const DistanceMatrix& dm, int diameter, VertexSet t) {
  if (t.size() < 2) throw GraphError("is_diametrical: need at least two vertices");
  for (Vertex u : t) {
    for (Vertex v : t) {
      if (u < v && dm.at(u, v) != diameter) return false;
    }
  }
  return true;
}

bool is_diametrical(const Graph& g, VertexSet t) {
  g.check_subset(t);
  if (t.size() < 2) throw GraphError("is_diametrical: need at least two vertices");
  DistanceMatrix dm(g);
  std::vector<int> ecc = eccentricities(dm);
  return is_diametrical(dm, *std::max_element(ecc.begin(), ecc.end()), t);
}

bool dominates(const Graph& g, VertexSet s) { return g.closed_neighbors(s) == g.vertices(); }

bool dominates_within(const Graph& g, VertexSet s, VertexSet within) {
  return within.subset_of(g.closed_neighbors(s));
}

RadiusDiameter induced_radius_diameter(const Graph& g, VertexSet s) {
  InducedSubgraph sub = induced_subgraph(g, s);
  std::vector<int> ecc = eccentricities(DistanceMatrix(sub.graph));
  return {*std::min_element(ecc.begin(), ecc.end()), *std::max_element(ecc.begin(), ecc.end())};
}

}  // namespace chordcenter
