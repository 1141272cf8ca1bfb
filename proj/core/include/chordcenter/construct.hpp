#pragma once

#include <string>
#include <vector>

#include "chordcenter/clause.hpp"
#include "chordcenter/graph.hpp"

namespace chordcenter {

/// A construction's precondition did not hold; what() names it.
class ConstructionError : public GraphError {
 public:
  using GraphError::GraphError;
};

struct AddedVertex {
  std::string name;  // "w_1", "w_1'", "u", ...
  Vertex index = 0;
  VertexSet attached;
};

/// A graph whose center is meant to be the embedded input. New vertices are
/// appended after the input's, so the embedding is the identity on 0..n-1.
struct HostGraph {
  Graph host{1};
  std::vector<Vertex> embedding;
  std::string construction;
  std::vector<AddedVertex> added;
  /// Recomputed on the host after construction.
  std::vector<Clause> checks;
  bool verified = false;

  VertexSet embedded() const;
};

/// Pendant w_i on every vertex of eccentricity two. Requires g connected,
/// chordal, Diam <= 3 and Rad(<C(g)>) = 2.
HostGraph host_pendant(const Graph& g);

/// w_1 on K1 with pendant w_1', w_2 on K2 with pendant w_2'. Requires g
/// connected, chordal, Diam <= 3 and K1, K2 disjoint cliques dominating g.
HostGraph host_two_cliques(const Graph& g, VertexSet k1, VertexSet k2);

/// w_u and w_v adjacent to all of g, pendants u on w_u and v on w_v.
/// Requires k >= 4 and chordality_index(g) <= k.
HostGraph host_kchordal(const Graph& g, int k);

/// Dispatches on the is_center_of_chordal certificate; throws when the
/// verdict is no.
HostGraph build_host(const Graph& g);

}  // namespace chordcenter
