#pragma once

#include <optional>
#include <vector>

#include "chordcenter/graph.hpp"

namespace chordcenter {

struct ChordalityReport {
  bool is_chordal = false;
  /// Smallest k >= 3 such that the graph has no induced cycle longer than k.
  int k_index = 3;
  /// A longest induced cycle, present when k_index >= 4. Starts at its
  /// minimum vertex and is the lexicographically smallest such sequence.
  std::optional<std::vector<Vertex>> witness_cycle;
  /// Perfect elimination ordering, present iff the graph is chordal.
  std::optional<std::vector<Vertex>> peo;
};

ChordalityReport chordality_index(const Graph& g);

/// Maximum cardinality search followed by the fill-in test.
/// Returns a perfect elimination ordering or nullopt.
std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g);
bool is_chordal(const Graph& g);

/// Longest induced cycle (length >= 4) by DFS over chordless paths; nullopt
/// when there is none.
std::optional<std::vector<Vertex>> longest_hole(const Graph& g);

VertexSet simplicial_vertices(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);

/// Maximal cliques of the subgraph induced by `within` (Bron-Kerbosch with
/// Tomita pivoting), in discovery order.
std::vector<VertexSet> maximal_cliques(const Graph& g, VertexSet within);

}  // namespace chordcenter
