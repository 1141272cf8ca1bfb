#include "chordcenter/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "chordcenter/chordality.hpp"

namespace chordcenter {

int slot_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int slot = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++slot) {
      if ((code >> slot) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

std::uint64_t code_of(const Graph& g) {
  std::uint64_t code = 0;
  int slot = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i, ++slot) {
      if (g.adjacent(i, j)) code |= std::uint64_t{1} << slot;
    }
  }
  return code;
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kMaxLabelledOrder) throw BudgetExceeded("canonical_code: n > 8");
  // position -> vertex, grouped by non-increasing degree.
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && g.degree(order[j]) == g.degree(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = ~std::uint64_t{0};
  // Odometer over the permutations of each equal-degree block.
  std::function<void(std::size_t)> walk = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::uint64_t code = 0;
      int slot = 0;
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++slot) {
          if (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) {
            code |= std::uint64_t{1} << slot;
          }
        }
      }
      best = std::min(best, code);
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do {
      walk(b + 1);
    } while (std::next_permutation(first, last));
  };
  walk(0);
  return best;
}

EnumerationStream::EnumerationStream(int n, GraphFilter filter, Dedup dedup, std::uint64_t first,
                                     std::optional<std::uint64_t> last)
    : n_(n), filter_(filter), dedup_(dedup), code_(first) {
  if (n < 1 || n > kMaxLabelledOrder) {
    throw BudgetExceeded("enumeration order must be in [1, 8], got " + std::to_string(n));
  }
  limit_ = std::uint64_t{1} << slot_count(n);
  end_ = std::min(last.value_or(limit_), limit_);
}

std::optional<Graph> EnumerationStream::next() {
  while (code_ < end_) {
    Graph g = graph_from_code(n_, code_++);
    if (filter_ != GraphFilter::all && !is_connected(g)) continue;
    if (filter_ == GraphFilter::connected_chordal && !is_chordal(g)) continue;
    if (dedup_ == Dedup::canonical && canonical_code(g) != code_of(g)) continue;
    return g;
  }
  return std::nullopt;
}

std::vector<Graph> enumerate_graphs(int n, GraphFilter filter, Dedup dedup) {
  EnumerationStream stream(n, filter, dedup);
  std::vector<Graph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

void for_each_graph(int n, GraphFilter filter, int jobs,
                    const std::function<void(const Graph&)>& fn) {
  const std::uint64_t total = std::uint64_t{1} << slot_count(n);
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    EnumerationStream stream(n, filter, Dedup::none);
    while (auto g = stream.next()) fn(*g);
    return;
  }
  std::vector<std::jthread> workers;
  const std::uint64_t chunk = (total + static_cast<std::uint64_t>(jobs) - 1) / static_cast<std::uint64_t>(jobs);
  for (int j = 0; j < jobs; ++j) {
    std::uint64_t first = chunk * static_cast<std::uint64_t>(j);
    if (first >= total) break;
    workers.emplace_back([=, &fn] {
      EnumerationStream stream(n, filter, Dedup::none, first, std::min(total, first + chunk));
      while (auto g = stream.next()) fn(*g);
    });
  }
}

std::vector<std::vector<int>> brute_distances(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  const int inf = g.order() + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return d;
}

BruteMetrics brute_metrics(const Graph& g) {
  auto d = brute_distances(g);
  BruteMetrics m;
  for (const auto& row : d) {
    if (std::find(row.begin(), row.end(), -1) != row.end()) {
      throw GraphError("brute_metrics: graph not connected");
    }
    m.ecc.push_back(*std::max_element(row.begin(), row.end()));
  }
  m.radius = *std::min_element(m.ecc.begin(), m.ecc.end());
  m.diameter = *std::max_element(m.ecc.begin(), m.ecc.end());
  for (std::size_t v = 0; v < m.ecc.size(); ++v) {
    if (m.ecc[v] == m.radius) m.center.insert(static_cast<Vertex>(v));
  }
  return m;
}

namespace {

/// Calls fn on each k-subset of `pool` in lexicographic order; stops when
/// fn returns true.
template <typename Fn>
bool for_each_subset_of_size(const std::vector<Vertex>& pool, int k, Fn fn) {
  const int m = static_cast<int>(pool.size());
  if (k > m) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(pool[static_cast<std::size_t>(i)]);
    if (fn(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

bool cuts(const Graph& g, VertexSet x, Vertex u, VertexSet others) {
  return !component_of(g, x, u).intersects(others);
}

}  // namespace

std::optional<VertexSet> brute_min_separator(const Graph& g, Vertex u, VertexSet others,
                                             VertexSet candidates) {
  if (candidates.size() > 20) throw BudgetExceeded("brute_min_separator: more than 20 candidates");
  candidates -= others;
  candidates.erase(u);
  std::vector<Vertex> pool = candidates.to_vector();
  std::optional<VertexSet> found;
  for (int k = 0; k <= static_cast<int>(pool.size()) && !found; ++k) {
    for_each_subset_of_size(pool, k, [&](VertexSet s) {
      if (cuts(g, s, u, others)) found = s;
      return found.has_value();
    });
  }
  return found;
}

std::vector<VertexSet> brute_all_min_separators(const Graph& g, Vertex u, VertexSet others,
                                                VertexSet candidates) {
  std::optional<VertexSet> first = brute_min_separator(g, u, others, candidates);
  if (!first) return {};
  candidates -= others;
  candidates.erase(u);
  std::vector<VertexSet> out;
  for_each_subset_of_size(candidates.to_vector(), first->size(), [&](VertexSet s) {
    if (cuts(g, s, u, others)) out.push_back(s);
    return false;
  });
  return out;
}

InducedCycle brute_longest_induced_cycle(const Graph& g) {
  const int n = g.order();
  if (n > 12) throw BudgetExceeded("brute_longest_induced_cycle: n > 12");
  InducedCycle best;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet s = VertexSet::from_bits(bits);
    if (s.size() < 3 || s.size() < best.length) continue;
    bool two_regular = std::all_of(s.begin(), s.end(),
                                   [&](Vertex v) { return (g.neighbors(v) & s).size() == 2; });
    if (!two_regular || component_of(g, g.vertices() - s, s.front()) != s) continue;
    // Walk the cycle from its minimum vertex towards the smaller neighbour.
    std::vector<Vertex> seq{s.front()};
    Vertex prev = s.front();
    Vertex cur = (g.neighbors(prev) & s).front();
    while (cur != s.front()) {
      seq.push_back(cur);
      Vertex nxt = ((g.neighbors(cur) & s) - VertexSet::single(prev)).front();
      prev = cur;
      cur = nxt;
    }
    if (s.size() > best.length || seq < best.witness) {
      best.length = s.size();
      best.witness = seq;
    }
  }
  return best;
}

std::vector<VertexSet> brute_minimal_separators(const Graph& g) {
  const int n = g.order();
  if (n > 16) throw BudgetExceeded("brute_minimal_separators: n > 16");
  std::vector<VertexSet> disconnecting;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet s = VertexSet::from_bits(bits);
    VertexSet rest = g.vertices() - s;
    if (rest.size() < 2) continue;
    if (component_of(g, s, rest.front()) != rest) disconnecting.push_back(s);
  }
  std::vector<VertexSet> out;
  for (VertexSet s : disconnecting) {
    bool minimal = std::none_of(disconnecting.begin(), disconnecting.end(),
                                [s](VertexSet o) { return o != s && o.subset_of(s); });
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return lex_less(a, b); });
  return out;
}

StretchVerdict brute_check_stretched(const Graph& g, VertexSet t_set, int t,
                                     SeparatorChoice choice) {
  if (g.order() > 16) throw BudgetExceeded("brute_check_stretched: n > 16");
  auto d = brute_distances(g);
  for (const auto& row : d) {
    if (std::find(row.begin(), row.end(), -1) != row.end()) return StretchVerdict::not_applicable;
  }
  int diameter = 0;
  for (const auto& row : d) diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));
  if (t < 1 || t > diameter - 1 || t_set.size() < 2) return StretchVerdict::not_applicable;
  auto dist = [&](Vertex a, Vertex b) { return d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  auto dist_to = [&](Vertex a, VertexSet s) {
    int best = -1;
    for (Vertex b : s) {
      if (best < 0 || dist(a, b) < best) best = dist(a, b);
    }
    return best;
  };
  for (Vertex a : t_set) {
    for (Vertex b : t_set) {
      if (a != b && dist(a, b) != diameter) return StretchVerdict::not_applicable;
    }
  }

  for (Vertex u : t_set) {
    VertexSet rest = t_set - VertexSet::single(u);
    VertexSet sphere;
    for (Vertex y = 0; y < g.order(); ++y) {
      if (dist(u, y) == t) sphere.insert(y);
    }
    // C1: all of T - u in one component of G - N(u, t).
    for (Vertex a : rest) {
      for (Vertex b : rest) {
        if (!component_of(g, sphere, a).contains(b)) return StretchVerdict::invalid;
      }
    }
    // C2, literally: for every w cut off from T - u by X_u with
    // d(w, T - u) = D and some x in X_u with d(w, x) > t: d(w, X_u) <= t - 1.
    auto c2 = [&](VertexSet x) {
      for (Vertex w = 0; w < g.order(); ++w) {
        if (x.contains(w)) continue;
        VertexSet side = component_of(g, x, w);
        if (side.intersects(rest)) continue;
        if (dist_to(w, rest) != diameter) continue;
        bool far = false;
        for (Vertex y : x) far = far || dist(w, y) > t;
        if (far && !(dist_to(w, x) <= t - 1)) return false;
      }
      return true;
    };
    std::vector<VertexSet> options;
    if (choice == SeparatorChoice::lexicographic) {
      std::optional<VertexSet> x = brute_min_separator(g, u, rest, sphere);
      if (x) options.push_back(*x);
    } else {
      options = brute_all_min_separators(g, u, rest, sphere);
    }
    if (options.empty()) return StretchVerdict::invalid;
    bool ok = choice == SeparatorChoice::exists
                  ? std::any_of(options.begin(), options.end(), c2)
                  : std::all_of(options.begin(), options.end(), c2);
    if (!ok) return StretchVerdict::invalid;
  }
  return StretchVerdict::valid;
}

}  // namespace chordcenter
