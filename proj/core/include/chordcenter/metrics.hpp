#pragma once

#include <vector>

#include "chordcenter/graph.hpp"

namespace chordcenter {

struct MetricSummary {
  std::vector<int> ecc;
  int radius = 0;
  int diameter = 0;
  VertexSet center;
  /// C^0 = V, C^1 = C, C^i = C(<C^{i-1}>), up to and including the first
  /// repeated set.
  std::vector<VertexSet> iterated_centers;

  /// C^i, saturating at the fixed point.
  VertexSet center_power(int i) const;
};

/// Eccentricities from a precomputed matrix; graph must be connected.
std::vector<int> eccentricities(const DistanceMatrix& dm);
/// Vertices of minimum eccentricity.
VertexSet center_of(const Graph& g);

/// Requires a connected graph (GraphError otherwise).
MetricSummary metric_summary(const Graph& g);
bool is_self_centered(const Graph& g);
/// Every pair of distinct vertices of T lies at distance Diam(G); |T| >= 2.
bool is_diametrical(const Graph& g, VertexSet t);
bool is_diametrical(const DistanceMatrix& dm, int diameter, VertexSet t);
/// N[S] = V(G).
bool dominates(const Graph& g, VertexSet s);
/// Every vertex of `within` outside S has a neighbour in S.
bool dominates_within(const Graph& g, VertexSet s, VertexSet within);

/// Radius and diameter of the subgraph induced by S (distances measured
/// inside the subgraph). Throws if <S> is disconnected.
struct RadiusDiameter {
  int radius = 0;
  int diameter = 0;
};
RadiusDiameter induced_radius_diameter(const Graph& g, VertexSet s);

}  // namespace chordcenter
