#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chordcenter/clause.hpp"
#include "chordcenter/graph.hpp"
#include "chordcenter/separators.hpp"
#include "chordcenter/stretched.hpp"

namespace chordcenter {

/// Outcome of a theorem-level check. When the hypotheses are not met the
/// clauses are empty and `unmet` names the first failing hypothesis.
struct TheoremReport {
  std::string name;
  bool applicable = true;
  std::string unmet;
  std::vector<Clause> clauses;

  bool ok() const { return all_hold(clauses); }
};

// -- Radius / diameter bounds for k-chordal graphs ---------------------------

struct BoundsReport {
  int radius = 0;
  int diameter = 0;
  int k = 3;
  /// R >= ceil(D/2); floor(D/2) >= R - floor(k/2);
  /// max{R, 2R - 2 floor(k/2)} <= D; D <= 2R.
  std::vector<Clause> clauses;

  bool ok() const { return all_hold(clauses); }
};

BoundsReport check_bounds(const Graph& g);
BoundsReport check_bounds(int radius, int diameter, int k);

// -- Connected subgraph holding the center ------------------------------------

struct CenterHull {
  /// H = <N_<=(X_u, floor(k/2))>; V(G) when D <= 1.
  VertexSet vertices;
  std::optional<Vertex> anchor;
  VertexSet separator;
  bool connected = false;
  int radius = 0;
  int diameter = 0;
  /// C(G) in V(H); H connected; Rad(H) <= 2 floor(k/2); Diam(H) <= 3 floor(k/2).
  std::vector<Clause> clauses;
};

/// Uses the first member of a ceil(D/2)-stretched set.
CenterHull center_hull(const Graph& g, const StretchedSet& s, int k);
/// Builds the ceil(D/2)-stretched set itself.
CenterHull center_hull(const Graph& g);

// -- Dominating cliques --------------------------------------------------------

struct CliquePair {
  VertexSet first;
  VertexSet second;
};

inline constexpr int kDefaultCliqueSearchOrder = 32;

/// Two disjoint cliques, each dominating g, or nullopt when none exist. The
/// search is exact: the first clique ranges over the dominating prefixes of
/// all cliques, the second over maximal cliques of the remainder.
std::optional<CliquePair> disjoint_dominating_cliques(const Graph& g,
                                                      int max_order = kDefaultCliqueSearchOrder);

// -- Self-centered chordal certificate ----------------------------------------

struct SeparatorFamily {
  enum class Route { stretched, exhaustive };

  std::vector<VertexSet> cliques;
  Route route = Route::stretched;
  /// Max degree <= n - 2 plus the five family conditions.
  std::vector<Clause> conditions;

  bool ok() const { return all_hold(conditions); }
};

/// Re-verifies a family from scratch: (0) max degree <= n - 2, (1) each member
/// is a clique separating G, (2) every vertex has a neighbour in every member,
/// (3) members pairwise intersect, (4) the total intersection is empty,
/// (5) every two vertices share a neighbour in the union.
std::vector<Clause> check_separator_family(const Graph& g, const std::vector<VertexSet>& cliques);

struct SelfCenteredCertificate {
  enum class Kind { complete, family, none };
  Kind kind = Kind::none;
  std::optional<SeparatorFamily> family;
};

/// For connected chordal g: "complete", a verified family, or "none". Tries
/// the separators of a maximal 1-stretched set first, then every family of
/// minimal separators. Throws on non-chordal input.
SelfCenteredCertificate self_centered_certificate(const Graph& g);

// -- Center of some chordal graph ---------------------------------------------

enum class CenterReason { none, not_connected, not_chordal, diameter_exceeds_3, no_structure };
std::string to_string(CenterReason r);

struct SelfCenteredCenter {
  VertexSet center;
  /// Family of <C(G)>, in G's vertex indices.
  std::optional<SeparatorFamily> family;
};

struct CenterCertificate {
  bool verdict = false;
  CenterReason reason = CenterReason::none;
  std::optional<CliquePair> cliques;
  std::optional<SelfCenteredCenter> self_centered;
};

/// Connected, chordal, Diam <= 3, and either <C(G)> self-centered of radius
/// two or two disjoint dominating cliques; checked in that order. n >= 2.
CenterCertificate is_center_of_chordal(const Graph& g);

/// Independent re-check of a "yes" certificate's evidence.
bool recheck_certificate(const Graph& g, const CenterCertificate& cert);

// -- Structure theorems for chordal graphs ------------------------------------

/// Diam(G) = 3 with <C(G)> self-centered of radius two: the separator family
/// of <C(G)> separates and dominates G.
TheoremReport check_diam3_structure(const Graph& g);

enum class CenterCase { two_r, two_r_minus_1, two_r_minus_2 };
std::string to_string(CenterCase c);

struct CenterStructure {
  CenterCase which = CenterCase::two_r;
  TheoremReport report;
  /// Stretched set used for the 2R-1 and 2R-2 cases.
  std::optional<StretchedSet> stretched;
};

/// Classifies D against 2R, 2R-1, 2R-2 and checks the matching structure.
/// Throws when g is not connected and chordal.
CenterStructure center_structure_class(const Graph& g);

/// A vertex of W_u adjacent to all of X_u (maximising |N(w) & X_u|), or
/// nullopt if none covers X_u.
std::optional<Vertex> dominating_vertex_for_separator(const Graph& g, const ConstrainedSeparator& cs);

/// For a maximal floor(D/2)-stretched set: floor(D/2) = R iff C(G) is the
/// intersection of the X_u.
TheoremReport check_center_intersection(const Graph& g, const StretchedSet& s);
/// Builds the maximal floor(D/2)-stretched set itself.
TheoremReport check_center_intersection(const Graph& g);

/// The three clauses tying X_u of a ceil(D/2)-stretched set to C(G) in
/// chordal graphs.
TheoremReport check_center_separators(const Graph& g, const StretchedSet& s);

/// Every induced path between two center vertices stays in the center.
Clause check_center_paths(const Graph& g);

}  // namespace chordcenter
