#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "chordcenter/graph.hpp"

namespace chordcenter {

// ---------------------------------------------------------------------------
// Small-graph enumeration.
//
// A labelled graph on n vertices is identified by an edge code: bit k is set
// iff the k-th slot of the upper triangle, taken column by column
// ((0,1), (0,2), (1,2), (0,3), ...), is an edge. This is the same slot order
// graph6 uses. Streams walk the codes in ascending order.

enum class GraphFilter { all, connected, connected_chordal };
enum class Dedup { none, canonical };

inline constexpr int kMaxLabelledOrder = 8;

int slot_count(int n);
Graph graph_from_code(int n, std::uint64_t code);
std::uint64_t code_of(const Graph& g);
/// Smallest edge code over all relabelings that list vertices by
/// non-increasing degree. Equal for isomorphic graphs.
std::uint64_t canonical_code(const Graph& g);

class EnumerationStream {
 public:
  /// Walks codes in [first, last); `last` defaults to 2^slots.
  EnumerationStream(int n, GraphFilter filter, Dedup dedup, std::uint64_t first = 0,
                    std::optional<std::uint64_t> last = std::nullopt);

  std::optional<Graph> next();
  std::uint64_t code_count() const { return limit_; }

 private:
  int n_;
  GraphFilter filter_;
  Dedup dedup_;
  std::uint64_t code_;
  std::uint64_t end_;
  std::uint64_t limit_;
};

std::vector<Graph> enumerate_graphs(int n, GraphFilter filter, Dedup dedup = Dedup::none);

/// Runs fn on every graph of the stream, splitting the code range across
/// `jobs` threads. fn must be safe to call concurrently.
void for_each_graph(int n, GraphFilter filter, int jobs, const std::function<void(const Graph&)>& fn);

// ---------------------------------------------------------------------------
// Brute-force oracles. None of these call the optimised modules; they share
// only the Graph container and component search.

class BudgetExceeded : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Floyd-Warshall distances; -1 for unreachable.
std::vector<std::vector<int>> brute_distances(const Graph& g);

struct BruteMetrics {
  std::vector<int> ecc;
  int radius = 0;
  int diameter = 0;
  VertexSet center;
};
BruteMetrics brute_metrics(const Graph& g);

/// Smallest subset of `candidates` separating u from all of `others`,
/// searched by size then lexicographically. |candidates| <= 20.
std::optional<VertexSet> brute_min_separator(const Graph& g, Vertex u, VertexSet others,
                                             VertexSet candidates);
/// All minimum-cardinality separating subsets of `candidates`.
std::vector<VertexSet> brute_all_min_separators(const Graph& g, Vertex u, VertexSet others,
                                                VertexSet candidates);

struct InducedCycle {
  /// 0 when the graph has no cycle at all.
  int length = 0;
  std::vector<Vertex> witness;
};
/// Longest induced cycle by testing every vertex subset. n <= 12.
InducedCycle brute_longest_induced_cycle(const Graph& g);

/// Inclusion-minimal vertex sets S with G - S disconnected, by subset search.
std::vector<VertexSet> brute_minimal_separators(const Graph& g);

enum class StretchVerdict { valid, invalid, not_applicable };
/// How X_u is chosen when several minimum separators exist.
enum class SeparatorChoice {
  lexicographic,  ///< the brute_min_separator choice
  exists,         ///< some minimum separator satisfies C2
  every,          ///< every minimum separator satisfies C2
};

/// Literal evaluation of the t-stretched definition. n <= 16.
StretchVerdict brute_check_stretched(const Graph& g, VertexSet t_set, int t,
                                     SeparatorChoice choice = SeparatorChoice::lexicographic);

}  // namespace chordcenter
