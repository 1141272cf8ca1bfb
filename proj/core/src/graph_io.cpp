#include "chordcenter/graph_io.hpp"

#include <map>
#include <set>
#include <sstream>

namespace chordcenter {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int slots(int n) { return n * (n - 1) / 2; }

}  // namespace

std::string LabeledGraph::render(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    out += label(v);
    first = false;
  }
  return out + "}";
}

LabeledGraph labeled_identity(const Graph& g) {
  LabeledGraph out{g, {}};
  for (Vertex v = 0; v < g.order(); ++v) out.labels.push_back(std::to_string(v));
  return out;
}

LabeledGraph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view prefix = ">>graph6<<";
  if (text.starts_with(prefix)) text.remove_prefix(prefix.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
  }
  auto byte = [&](std::size_t i) { return static_cast<int>(text[i]) - 63; };

  int n = 0;
  std::size_t pos = 0;
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else {
    if (text.size() < 4 || byte(1) == 63) throw ParseError("graph6: malformed header");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  }
  if (n < 1 || n > kMaxVertices) {
    throw ParseError("graph6: order " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxVertices));
  }
  const int bits = slots(n);
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != body) {
    throw ParseError("graph6: expected " + std::to_string(body) + " data bytes for n=" +
                     std::to_string(n));
  }
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int b = byte(pos + static_cast<std::size_t>(k / 6));
      if ((b >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return labeled_identity(g);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  int acc = 0;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (k % 6 == 5) {
        out += static_cast<char>(acc + 63);
        acc = 0;
      }
    }
  }
  if (k % 6 != 0) out += static_cast<char>((acc << (6 - k % 6)) + 63);
  return out;
}

LabeledGraph parse_edge_list(std::string_view text) {
  std::map<std::string, Vertex, std::less<>> index;
  std::vector<std::string> labels;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;

  auto vertex = [&](const std::string& name, int line) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    if (static_cast<int>(labels.size()) == kMaxVertices) {
      throw ParseError("edge-list line " + std::to_string(line) + ": more than " +
                       std::to_string(kMaxVertices) + " labels");
    }
    const Vertex v = static_cast<Vertex>(labels.size());
    index.emplace(name, v);
    labels.push_back(name);
    return v;
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() > 2) {
      throw ParseError("edge-list line " + std::to_string(line) + ": expected \"u v\"");
    }
    if (tokens.size() == 1) {
      vertex(tokens[0], line);
      continue;
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError("edge-list line " + std::to_string(line) + ": self-loop on " + tokens[0]);
    }
    const Vertex a = vertex(tokens[0], line);
    const Vertex b = vertex(tokens[1], line);
    if (!seen.insert(std::minmax(a, b)).second) {
      throw ParseError("edge-list line " + std::to_string(line) + ": duplicate edge " +
                       tokens[0] + " " + tokens[1]);
    }
    edges.emplace_back(a, b);
  }
  if (labels.empty()) throw ParseError("edge-list: no vertices");
  return LabeledGraph{Graph(static_cast<int>(labels.size()), edges), std::move(labels)};
}

LabeledGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string to_edge_list(const LabeledGraph& g) {
  std::string out;
  VertexSet covered;
  for (const auto& [a, b] : g.graph.edges()) {
    out += g.label(a) + ' ' + g.label(b) + '\n';
    covered.insert(a);
    covered.insert(b);
  }
  for (Vertex v : g.graph.vertices() - covered) out += g.label(v) + '\n';
  return out;
}

}  // namespace chordcenter
