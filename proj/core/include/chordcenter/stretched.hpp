#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chordcenter/clause.hpp"
#include "chordcenter/graph.hpp"
#include "chordcenter/separators.hpp"

namespace chordcenter {

/// Per-member outcome of the two stretch conditions.
///
/// C1: N(u, t) does not separate T - u.
/// C2: with X_u the bound minimum separator, no vertex w cut off from T - u by
///     X_u has d(w, T - u) = D, d(w, x) > t for some x in X_u and
///     d(w, X_u) >= t.
struct MemberCheck {
  Vertex u = 0;
  bool c1 = false;
  /// Only evaluated when c1 holds.
  bool c2 = false;
  std::optional<ConstrainedSeparator> separator;
  /// Smallest C2 violator, if any.
  std::optional<Vertex> violator;
};

struct StretchCheck {
  VertexSet members;
  int t = 0;
  std::vector<MemberCheck> checks;

  bool ok() const;
  /// Smallest member failing C1 or C2.
  std::optional<Vertex> first_failure() const;
};

/// A t-stretched diametrical set with the separator bound to each member.
/// The bound X_u are the ones C2 was verified against; they are never
/// recomputed.
struct StretchedSet {
  VertexSet members;
  int t = 0;
  /// One entry per member, ascending by member.
  std::vector<ConstrainedSeparator> separators;
  bool maximal = false;
  /// Member swaps performed while repairing C2.
  int swaps = 0;

  const ConstrainedSeparator& at(Vertex u) const;
};

/// Raised when the swap procedure fails to produce a t-stretched set. Such a
/// failure contradicts the existence claim it implements and is reported with
/// the last working set.
class StretchFailure : public GraphError {
 public:
  StretchFailure(const std::string& what, VertexSet last) : GraphError(what), last_set(last) {}
  VertexSet last_set;
};

/// Evaluates C1/C2 for each member using the canonical flow separator.
/// Requires a connected graph, T diametrical and 1 <= t <= D - 1.
StretchCheck check_t_stretched(const Graph& g, VertexSet t_set, int t);
StretchCheck check_t_stretched(const Graph& g, const DistanceMatrix& dm, VertexSet t_set, int t);

/// Evaluates C2 for member u against a caller-chosen X (C1 is evaluated too).
MemberCheck check_member(const Graph& g, const DistanceMatrix& dm, int diameter, VertexSet t_set,
                         int t, Vertex u, VertexSet x);

/// Builds a t-stretched diametrical pair: the lexicographically first
/// diametrical pair, repaired by swapping C2-violating members for the
/// witness whose t-sphere leaves the largest component around the rest.
/// Requires 1 <= t <= min(ceil(D/2), D - 1).
StretchedSet build_t_stretched(const Graph& g, int t);

/// Grows S while some w with d(w, T) = D leaves T connected after removing
/// N(w, t). The result contains S.members and is flagged maximal.
StretchedSet extend_to_maximal(const Graph& g, const StretchedSet& s);

/// Runs the swap procedure from an arbitrary diametrical set whose members
/// satisfy C1.
StretchedSet repair_t_stretched(const Graph& g, VertexSet start, int t);

/// No vertex w outside T with d(w, T) = D leaves T connected in G - N(w, t).
bool admits_extension(const Graph& g, const DistanceMatrix& dm, int diameter, VertexSet t_set,
                      int t, Vertex w);

/// Per-clause report of the basic t-stretched properties (i)-(v).
/// k is the chordality index of g.
std::vector<Clause> verify_basic_sds(const Graph& g, const StretchedSet& s, int k);

/// C(G) is inside the radius-R ball of every member of a diametrical T.
Clause verify_center_in_balls(const Graph& g, VertexSet t_set);

/// For a floor(D/2)-stretched set: X_u and W_v are disjoint for all u != v.
Clause verify_separation(const Graph& g, const StretchedSet& s);

}  // namespace chordcenter
