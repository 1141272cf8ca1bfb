#pragma once

#include <initializer_list>
#include <vector>

#include "chordcenter/graph.hpp"
#include "chordcenter/oracle.hpp"

namespace testing_support {

using chordcenter::Graph;
using chordcenter::Vertex;
using chordcenter::VertexSet;

inline VertexSet set(std::initializer_list<Vertex> vs) { return VertexSet(vs); }

// The nine-vertex fixture uses labels 1..9 on indices 0..8.
inline Vertex fig(int label) { return label - 1; }
inline VertexSet figset(std::initializer_list<int> labels) {
  VertexSet s;
  for (int l : labels) s.insert(fig(l));
  return s;
}

// Three induced paths a, b, c of length t; cliques A and B joined into one
// clique; a_{t-1} sees A, b_{t-1} sees B, c_{t-1} sees B' (the first |b'|
// vertices of B).
struct ThreePaths {
  Graph g{1};
  int t = 0;
  Vertex a0 = 0, b0 = 0, c0 = 0;
};

inline ThreePaths three_paths(int t, int a_size, int b_size, int b_prime) {
  const int n = 3 * t + a_size + b_size;
  ThreePaths out{Graph(n), t};
  auto path = [&](int start) {
    for (int i = 0; i + 1 < t; ++i) out.g.add_edge(start + i, start + i + 1);
  };
  const int a = 0, b = t, c = 2 * t, ca = 3 * t, cb = 3 * t + a_size;
  path(a);
  path(b);
  path(c);
  for (int i = ca; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.g.add_edge(i, j);
  }
  for (int i = 0; i < a_size; ++i) out.g.add_edge(a + t - 1, ca + i);
  for (int i = 0; i < b_size; ++i) out.g.add_edge(b + t - 1, cb + i);
  for (int i = 0; i < b_prime; ++i) out.g.add_edge(c + t - 1, cb + i);
  out.a0 = a;
  out.b0 = b;
  out.c0 = c;
  return out;
}

template <typename Fn>
void for_all(int max_n, chordcenter::GraphFilter filter, Fn&& fn) {
  for (int n = 1; n <= max_n; ++n) {
    chordcenter::EnumerationStream s(n, filter, chordcenter::Dedup::none);
    while (auto g = s.next()) fn(*g);
  }
}

}  // namespace testing_support
