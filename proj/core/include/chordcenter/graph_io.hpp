#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chordcenter/graph.hpp"

namespace chordcenter {

class ParseError : public GraphError {
 public:
  using GraphError::GraphError;
};

enum class GraphFormat { graph6, edge_list };

/// A graph plus the external name of every vertex.
struct LabeledGraph {
  Graph graph{1};
  std::vector<std::string> labels;

  const std::string& label(Vertex v) const { return labels.at(static_cast<std::size_t>(v)); }
  std::string render(VertexSet s) const;
};

/// Labels are "0".."n-1". Accepts an optional ">>graph6<<" prefix and
/// surrounding whitespace; n <= 64 (the 63/64 case uses the long header).
LabeledGraph parse_graph6(std::string_view text);
/// One "u v" pair per line; a single token declares an isolated vertex.
/// Blank lines and '#' comments are skipped; labels are numbered in order
/// of first appearance.
LabeledGraph parse_edge_list(std::string_view text);
LabeledGraph parse_graph(std::string_view text, GraphFormat format);

std::string to_graph6(const Graph& g);
std::string to_edge_list(const LabeledGraph& g);

LabeledGraph labeled_identity(const Graph& g);

}  // namespace chordcenter
