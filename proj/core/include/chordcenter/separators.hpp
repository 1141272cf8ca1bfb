#pragma once

#include <optional>
#include <vector>

#include "chordcenter/graph.hpp"

namespace chordcenter {

/// A minimum-cardinality X within N(u, t) separating u from `others`,
/// together with the two sides of G - X.
struct ConstrainedSeparator {
  Vertex u = 0;
  VertexSet others;
  int t = 0;
  VertexSet x;
  /// Component of G - X containing u.
  VertexSet w_u;
  /// Union of the components of G - X meeting `others`.
  VertexSet w_rest;
};

/// True iff two vertices of T - S lie in different components of G - S.
/// With T = V(G) this is "S separates G". Throws if T is a subset of S.
bool is_separator(const Graph& g, VertexSet s, VertexSet t);

/// True iff no vertex of `targets` lies in the component of G - X holding a.
/// a must not be in X.
bool separates_from(const Graph& g, VertexSet x, Vertex a, VertexSet targets);

/// Minimum vertex cut between `source` and `sinks` using only vertices of
/// `candidates` (source and sinks are never cut). Returns the cut nearest the
/// source among all minimum cuts, or nullopt when no subset of the
/// candidates separates.
std::optional<VertexSet> min_vertex_cut(const Graph& g, Vertex source, VertexSet sinks,
                                        VertexSet candidates);

/// Thrown when min_separator_within's distance precondition fails.
class SeparatorPrecondition : public GraphError {
 public:
  using GraphError::GraphError;
};

/// X_u for the pair (u, others) at stretch t: a minimum subset of N(u, t)
/// separating u from every vertex of `others`. Requires a connected graph and
/// d(u, v) > t for all v in others.
std::optional<ConstrainedSeparator> min_separator_within(const Graph& g, Vertex u,
                                                         VertexSet others, int t);
std::optional<ConstrainedSeparator> min_separator_within(const Graph& g, const DistanceMatrix& dm,
                                                         Vertex u, VertexSet others, int t);

/// Fills w_u / w_rest for an already chosen X.
ConstrainedSeparator bind_separator(const Graph& g, Vertex u, VertexSet others, int t,
                                    VertexSet x);

/// All minimal (a,b)-separators of g (sets S with at least two full
/// components in G - S), sorted lexicographically.
std::vector<VertexSet> minimal_separators(const Graph& g);

/// Inclusion-minimal vertex sets whose removal disconnects a connected chordal
/// graph. Each is verified to be a clique. Throws on non-chordal input.
std::vector<VertexSet> minimal_separators_chordal(const Graph& g);

}  // namespace chordcenter
