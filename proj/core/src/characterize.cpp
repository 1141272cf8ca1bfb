#include "chordcenter/characterize.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "chordcenter/chordality.hpp"
#include "chordcenter/metrics.hpp"
#include "chordcenter/oracle.hpp"

namespace chordcenter {

namespace {

Clause make_clause(std::string name, bool holds, std::string evidence = {}) {
  Clause c{std::move(name)};
  c.holds = holds;
  if (!holds) c.evidence = std::move(evidence);
  return c;
}

Clause not_applicable(std::string name) {
  Clause c{std::move(name)};
  c.applicable = false;
  return c;
}

std::string values(std::initializer_list<std::pair<const char*, int>> kv) {
  std::ostringstream o;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) o << ' ';
    o << k << '=' << v;
    first = false;
  }
  return o.str();
}

TheoremReport unmet(std::string name, std::string why) {
  TheoremReport r{std::move(name)};
  r.applicable = false;
  r.unmet = std::move(why);
  return r;
}

bool is_complete(const Graph& g) { return g.edge_count() == g.order() * (g.order() - 1) / 2; }

VertexSet intersection_of(const std::vector<VertexSet>& sets) {
  if (sets.empty()) return {};
  VertexSet acc = sets.front();
  for (VertexSet s : sets) acc &= s;
  return acc;
}

}  // namespace

// -- Bounds --------------------------------------------------------------------

BoundsReport check_bounds(int radius, int diameter, int k) {
  const int half_k = k / 2;
  const std::string ctx = values({{"R", radius}, {"D", diameter}, {"k", k}});
  BoundsReport r{radius, diameter, k, {}};
  r.clauses.push_back(make_clause("R >= ceil(D/2)", radius >= (diameter + 1) / 2, ctx));
  r.clauses.push_back(
      make_clause("floor(D/2) >= R - floor(k/2)", diameter / 2 >= radius - half_k, ctx));
  r.clauses.push_back(make_clause("max{R, 2R - 2 floor(k/2)} <= D",
                                  std::max(radius, 2 * radius - 2 * half_k) <= diameter, ctx));
  r.clauses.push_back(make_clause("D <= 2R", diameter <= 2 * radius, ctx));
  return r;
}

BoundsReport check_bounds(const Graph& g) {
  MetricSummary m = metric_summary(g);
  return check_bounds(m.radius, m.diameter, chordality_index(g).k_index);
}

// -- Center hull ---------------------------------------------------------------

namespace {

CenterHull finish_hull(const Graph& g, CenterHull hull, int k) {
  const int half_k = k / 2;
  VertexSet center = center_of(g);
  InducedSubgraph sub = induced_subgraph(g, hull.vertices);
  hull.connected = is_connected(sub.graph);
  hull.clauses.push_back(make_clause("C(G) within H", center.subset_of(hull.vertices),
                                     "missing " + to_string(center - hull.vertices)));
  hull.clauses.push_back(make_clause("H connected", hull.connected, "H=" + to_string(hull.vertices)));
  if (hull.connected) {
    RadiusDiameter rd = induced_radius_diameter(g, hull.vertices);
    hull.radius = rd.radius;
    hull.diameter = rd.diameter;
    hull.clauses.push_back(make_clause("Rad(H) <= 2 floor(k/2)", rd.radius <= 2 * half_k,
                                       values({{"Rad(H)", rd.radius}, {"k", k}})));
    hull.clauses.push_back(make_clause("Diam(H) <= 3 floor(k/2)", rd.diameter <= 3 * half_k,
                                       values({{"Diam(H)", rd.diameter}, {"k", k}})));
  } else {
    hull.clauses.push_back(not_applicable("Rad(H) <= 2 floor(k/2)"));
    hull.clauses.push_back(not_applicable("Diam(H) <= 3 floor(k/2)"));
  }
  return hull;
}

}  // namespace

CenterHull center_hull(const Graph& g, const StretchedSet& s, int k) {
  MetricSummary m = metric_summary(g);
  if (g.order() < 2) throw GraphError("center_hull: need at least two vertices");
  if (s.t != (m.diameter + 1) / 2 || s.members.size() < 2) {
    throw GraphError("center_hull: stretched set must use t = ceil(D/2)");
  }
  CenterHull hull;
  hull.anchor = s.members.front();
  hull.separator = s.at(*hull.anchor).x;
  hull.vertices = DistanceMatrix(g).ball(hull.separator, k / 2);
  return finish_hull(g, hull, k);
}

CenterHull center_hull(const Graph& g) {
  MetricSummary m = metric_summary(g);
  const int k = chordality_index(g).k_index;
  if (m.diameter <= 1) {
    CenterHull hull;
    hull.vertices = g.vertices();
    return finish_hull(g, hull, k);
  }
  return center_hull(g, build_t_stretched(g, (m.diameter + 1) / 2), k);
}

// -- Dominating cliques --------------------------------------------------------

std::optional<CliquePair> disjoint_dominating_cliques(const Graph& g, int max_order) {
  if (g.order() > max_order) {
    throw BudgetExceeded("disjoint_dominating_cliques: n=" + std::to_string(g.order()) +
                         " exceeds the search budget of " + std::to_string(max_order));
  }
  const VertexSet all = g.vertices();
  std::optional<CliquePair> found;

  auto second_for = [&](VertexSet first) -> std::optional<VertexSet> {
    VertexSet rest = all - first;
    if (rest.empty()) return std::nullopt;
    for (VertexSet m : maximal_cliques(g, rest)) {
      if (!dominates(g, m)) continue;
      // Drop vertices while domination survives.
      for (Vertex v : m) {
        VertexSet smaller = m - VertexSet::single(v);
        if (!smaller.empty() && dominates(g, smaller)) m = smaller;
      }
      return m;
    }
    return std::nullopt;
  };

  // Cliques grown in ascending vertex order; growth stops at the first
  // dominating prefix, which is all the pair search needs.
  auto grow = [&](auto&& self, VertexSet clique, VertexSet extend) -> void {
    if (found) return;
    if (!clique.empty() && dominates(g, clique)) {
      if (auto second = second_for(clique)) found = CliquePair{clique, *second};
      return;
    }
    for (Vertex v : extend) {
      self(self, clique | VertexSet::single(v),
           extend & g.neighbors(v) & (all - VertexSet::range(v + 1)));
      if (found) return;
    }
  };
  grow(grow, {}, all);
  return found;
}

// -- Self-centered certificate ------------------------------------------------

std::vector<Clause> check_separator_family(const Graph& g, const std::vector<VertexSet>& cliques) {
  std::vector<Clause> out;
  const int n = g.order();
  out.push_back(make_clause("max degree <= n - 2", g.max_degree() <= n - 2,
                            values({{"max degree", g.max_degree()}, {"n", n}})));

  Clause sep{"(1) every X_i is a clique separating G"};
  Clause dom{"(2) every vertex has a neighbour in every X_i"};
  Clause pair{"(3) X_i and X_j intersect"};
  Clause total{"(4) the X_i have empty intersection"};
  Clause common{"(5) every two vertices have a common neighbour in the union"};
  auto fail = [](Clause& c, std::string why) {
    if (c.holds) c.evidence = std::move(why);
    c.holds = false;
  };

  if (cliques.empty()) fail(total, "empty family");
  VertexSet uni;
  for (VertexSet x : cliques) {
    uni |= x;
    if (!is_clique(g, x)) fail(sep, to_string(x) + " is not a clique");
    else if (x == g.vertices() || !is_separator(g, x, g.vertices())) {
      fail(sep, to_string(x) + " does not separate G");
    }
    for (Vertex z = 0; z < n; ++z) {
      if (!g.neighbors(z).intersects(x)) fail(dom, "z=" + std::to_string(z) + " X=" + to_string(x));
    }
    for (VertexSet y : cliques) {
      if (!x.intersects(y)) fail(pair, to_string(x) + " " + to_string(y));
    }
  }
  if (!cliques.empty() && !intersection_of(cliques).empty()) {
    fail(total, "common " + to_string(intersection_of(cliques)));
  }
  for (Vertex z = 0; z < n; ++z) {
    for (Vertex w = z + 1; w < n; ++w) {
      if (!(g.neighbors(z) & g.neighbors(w)).intersects(uni)) {
        fail(common, "z=" + std::to_string(z) + " z'=" + std::to_string(w));
      }
    }
  }
  out.insert(out.end(), {sep, dom, pair, total, common});
  return out;
}

SelfCenteredCertificate self_centered_certificate(const Graph& g) {
  if (!is_connected(g)) throw GraphError("self_centered_certificate: graph not connected");
  if (!is_chordal(g)) throw GraphError("self_centered_certificate: graph is not chordal");
  SelfCenteredCertificate out;
  if (is_complete(g)) {
    out.kind = SelfCenteredCertificate::Kind::complete;
    return out;
  }
  if (g.max_degree() > g.order() - 2) return out;

  MetricSummary m = metric_summary(g);
  if (m.diameter >= 2) {
    try {
      StretchedSet t = extend_to_maximal(g, build_t_stretched(g, 1));
      SeparatorFamily fam;
      for (const ConstrainedSeparator& cs : t.separators) fam.cliques.push_back(cs.x);
      fam.conditions = check_separator_family(g, fam.cliques);
      if (fam.ok()) {
        out.kind = SelfCenteredCertificate::Kind::family;
        out.family = std::move(fam);
        return out;
      }
    } catch (const StretchFailure&) {
      // Fall through to the exhaustive search.
    }
  }

  std::vector<VertexSet> seps = minimal_separators(g);
  const int m_count = static_cast<int>(seps.size());
  if (m_count > 20) {
    throw BudgetExceeded("self_centered_certificate: " + std::to_string(m_count) +
                         " minimal separators exceed the exhaustive budget");
  }
  // Families of size 1 or 2 cannot meet (3) and (4) together.
  for (int size = 3; size <= m_count; ++size) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m_count); ++mask) {
      if (std::popcount(mask) != size) continue;
      std::vector<VertexSet> cand;
      for (int i = 0; i < m_count; ++i) {
        if ((mask >> i) & 1U) cand.push_back(seps[static_cast<std::size_t>(i)]);
      }
      std::vector<Clause> cond = check_separator_family(g, cand);
      if (all_hold(cond)) {
        out.kind = SelfCenteredCertificate::Kind::family;
        out.family = SeparatorFamily{std::move(cand), SeparatorFamily::Route::exhaustive, std::move(cond)};
        return out;
      }
    }
  }
  return out;
}

// -- Center of a chordal graph ------------------------------------------------

std::string to_string(CenterReason r) {
  switch (r) {
    case CenterReason::none: return "none";
    case CenterReason::not_connected: return "not-connected";
    case CenterReason::not_chordal: return "not-chordal";
    case CenterReason::diameter_exceeds_3: return "diameter-exceeds-3";
    case CenterReason::no_structure: return "no-structure";
  }
  return "unknown";
}

CenterCertificate is_center_of_chordal(const Graph& g) {
  if (g.order() < 2) throw GraphError("is_center_of_chordal: need at least two vertices");
  CenterCertificate cert;
  auto no = [&](CenterReason r) {
    cert.reason = r;
    return cert;
  };
  if (!is_connected(g)) return no(CenterReason::not_connected);
  if (!is_chordal(g)) return no(CenterReason::not_chordal);
  MetricSummary m = metric_summary(g);
  if (m.diameter > 3) return no(CenterReason::diameter_exceeds_3);

  InducedSubgraph core = induced_subgraph(g, m.center);
  if (is_connected(core.graph)) {
    MetricSummary cm = metric_summary(core.graph);
    if (cm.radius == 2 && cm.diameter == 2) {
      SelfCenteredCenter evidence{m.center, std::nullopt};
      SelfCenteredCertificate inner = self_centered_certificate(core.graph);
      if (inner.family) {
        SeparatorFamily fam = *inner.family;
        for (VertexSet& x : fam.cliques) x = core.lift(x);
        evidence.family = std::move(fam);
      }
      cert.verdict = true;
      cert.self_centered = std::move(evidence);
      return cert;
    }
  }
  if (auto pair = disjoint_dominating_cliques(g)) {
    cert.verdict = true;
    cert.cliques = *pair;
    return cert;
  }
  return no(CenterReason::no_structure);
}

bool recheck_certificate(const Graph& g, const CenterCertificate& cert) {
  if (!cert.verdict) return false;
  if (!is_connected(g) || !is_chordal(g)) return false;
  BruteMetrics bm = brute_metrics(g);
  if (bm.diameter > 3) return false;
  if (cert.cliques) {
    const auto& [a, b] = *cert.cliques;
    return !a.empty() && !b.empty() && !a.intersects(b) && is_clique(g, a) && is_clique(g, b) &&
           dominates(g, a) && dominates(g, b);
  }
  if (cert.self_centered) {
    if (cert.self_centered->center != bm.center) return false;
    InducedSubgraph core = induced_subgraph(g, bm.center);
    if (!is_connected(core.graph)) return false;
    BruteMetrics cm = brute_metrics(core.graph);
    if (cm.radius != 2 || cm.diameter != 2) return false;
    if (cert.self_centered->family) {
      std::vector<VertexSet> local;
      for (VertexSet x : cert.self_centered->family->cliques) {
        if (!x.subset_of(bm.center)) return false;
        local.push_back(core.project(x));
      }
      return all_hold(check_separator_family(core.graph, local));
    }
    return true;
  }
  return false;
}

// -- Structure theorems --------------------------------------------------------

TheoremReport check_diam3_structure(const Graph& g) {
  const std::string name = "diameter-3 separator family";
  if (!is_connected(g)) return unmet(name, "graph not connected");
  if (!is_chordal(g)) return unmet(name, "graph not chordal");
  MetricSummary m = metric_summary(g);
  if (m.diameter != 3) return unmet(name, "diameter is " + std::to_string(m.diameter) + ", not 3");
  InducedSubgraph core = induced_subgraph(g, m.center);
  if (!is_connected(core.graph)) return unmet(name, "<C(G)> not connected");
  MetricSummary cm = metric_summary(core.graph);
  if (cm.radius != 2 || cm.diameter != 2) {
    return unmet(name, "<C(G)> is not self-centered with radius two");
  }

  TheoremReport r{name};
  r.clauses.push_back(make_clause("max degree <= n - 2", g.max_degree() <= g.order() - 2,
                                  values({{"max degree", g.max_degree()}})));
  SelfCenteredCertificate inner = self_centered_certificate(core.graph);
  r.clauses.push_back(make_clause("<C(G)> has a separator family", inner.family.has_value(),
                                  "no family found"));
  if (!inner.family) return r;
  std::vector<VertexSet> fam;
  for (VertexSet x : inner.family->cliques) fam.push_back(core.lift(x));

  r.clauses.push_back(make_clause("at least three cliques", fam.size() >= 3,
                                  std::to_string(fam.size()) + " cliques"));
  bool pairwise = true, cliques = true, separates = true, dominating = true;
  std::string bad;
  for (VertexSet x : fam) {
    for (VertexSet y : fam) pairwise = pairwise && x.intersects(y);
    cliques = cliques && is_clique(g, x);
    if (!is_separator(g, x, g.vertices())) {
      separates = false;
      bad = to_string(x);
    }
    if (!dominates(g, x)) {
      dominating = false;
      bad = to_string(x);
    }
  }
  r.clauses.push_back(make_clause("cliques pairwise intersect", pairwise));
  r.clauses.push_back(make_clause("total intersection empty", intersection_of(fam).empty(),
                                  to_string(intersection_of(fam))));
  r.clauses.push_back(make_clause("every member is a clique of G", cliques));
  r.clauses.push_back(make_clause("every member separates G", separates, bad));
  r.clauses.push_back(make_clause("every member dominates G", dominating, bad));
  return r;
}

std::string to_string(CenterCase c) {
  switch (c) {
    case CenterCase::two_r: return "D=2R";
    case CenterCase::two_r_minus_1: return "D=2R-1";
    case CenterCase::two_r_minus_2: return "D=2R-2";
  }
  return "unknown";
}

std::optional<Vertex> dominating_vertex_for_separator(const Graph& g, const ConstrainedSeparator& cs) {
  if (!is_chordal(g)) throw GraphError("dominating_vertex_for_separator: graph is not chordal");
  std::optional<Vertex> best;
  int cover = -1;
  for (Vertex w : cs.w_u) {
    int c = (g.neighbors(w) & cs.x).size();
    if (c > cover) {
      cover = c;
      best = w;
    }
  }
  if (!best || cover < cs.x.size()) return std::nullopt;
  return best;
}

CenterStructure center_structure_class(const Graph& g) {
  if (!is_connected(g)) throw GraphError("center_structure_class: graph not connected");
  if (!is_chordal(g)) throw GraphError("center_structure_class: graph is not chordal");
  MetricSummary m = metric_summary(g);
  const int r = m.radius;
  const int d = m.diameter;
  const VertexSet center = m.center;

  CenterStructure out;
  out.report.name = "center structure";
  auto& clauses = out.report.clauses;
  InducedSubgraph core = induced_subgraph(g, center);
  const bool core_connected = is_connected(core.graph);
  clauses.push_back(make_clause("<C> connected", core_connected, to_string(center)));
  if (core_connected) {
    int core_diam = metric_summary(core.graph).diameter;
    clauses.push_back(make_clause("Diam(<C>) <= 3", core_diam <= 3, values({{"Diam(<C>)", core_diam}})));
  }

  if (d == 2 * r) {
    out.which = CenterCase::two_r;
    clauses.push_back(make_clause("C is a clique", is_clique(g, center), to_string(center)));
  } else if (d == 2 * r - 1) {
    out.which = CenterCase::two_r_minus_1;
    if (r >= 2) {
      StretchedSet s = build_t_stretched(g, r);
      out.stretched = s;
      const ConstrainedSeparator& a = s.separators[0];
      const ConstrainedSeparator& b = s.separators[1];
      VertexSet k1 = a.x - b.x;
      VertexSet k2 = b.x - a.x;
      bool ok = !k1.empty() && !k2.empty() && k1.subset_of(center) && k2.subset_of(center) &&
                is_clique(g, k1) && is_clique(g, k2) && dominates_within(g, k1, center) &&
                dominates_within(g, k2, center);
      clauses.push_back(make_clause("X_u - X_v and X_v - X_u are disjoint cliques dominating <C>",
                                    ok, to_string(k1) + " " + to_string(k2)));
    } else {
      auto pair = disjoint_dominating_cliques(core.graph);
      clauses.push_back(make_clause("<C> has two disjoint dominating cliques", pair.has_value()));
    }
  } else if (d == 2 * r - 2) {
    out.which = CenterCase::two_r_minus_2;
    const VertexSet c2 = m.center_power(2);
    if (is_connected(induced_subgraph(g, c2).graph)) {
      RadiusDiameter rd = induced_radius_diameter(g, c2);
      clauses.push_back(make_clause("<C^2> self-centered with radius two",
                                    rd.radius == 2 && rd.diameter == 2,
                                    values({{"Rad", rd.radius}, {"Diam", rd.diameter}})));
    } else {
      clauses.push_back(make_clause("<C^2> self-centered with radius two", false,
                                    "<C^2> disconnected"));
    }
    StretchedSet s = extend_to_maximal(g, build_t_stretched(g, r - 1));
    out.stretched = s;
    std::vector<VertexSet> xs;
    for (const ConstrainedSeparator& cs : s.separators) xs.push_back(cs.x);
    clauses.push_back(make_clause("maximal (R-1)-stretched T has at least three members",
                                  s.members.size() >= 3, to_string(s.members)));
    clauses.push_back(make_clause("intersection of the X_u is empty", intersection_of(xs).empty(),
                                  to_string(intersection_of(xs))));
    bool pairwise = true;
    for (VertexSet x : xs) {
      for (VertexSet y : xs) pairwise = pairwise && x.intersects(y);
    }
    clauses.push_back(make_clause("X_u and X_v intersect", pairwise));
    DistanceMatrix dm(g);
    bool dominating = true;
    bool anchored = true;
    std::string missing;
    for (const ConstrainedSeparator& cs : s.separators) {
      dominating = dominating && dominates_within(g, cs.x, c2);
      VertexSet near = dm.ball(VertexSet::single(cs.u), r - 2) & c2;
      bool has = std::any_of(near.begin(), near.end(),
                             [&](Vertex w) { return cs.x.subset_of(g.neighbors(w)); });
      if (!has) {
        anchored = false;
        missing = "u=" + std::to_string(cs.u);
      }
    }
    clauses.push_back(make_clause("X_u dominates C^2", dominating));
    clauses.push_back(make_clause("some w_u in N_<=(u,R-2) & C^2 is adjacent to all of X_u",
                                  anchored, missing));
  } else {
    clauses.push_back(make_clause("D in {2R-2, 2R-1, 2R}", false, values({{"R", r}, {"D", d}})));
  }
  return out;
}

TheoremReport check_center_intersection(const Graph& g, const StretchedSet& s) {
  const std::string name = "center as intersection of separators";
  if (!is_connected(g)) return unmet(name, "graph not connected");
  if (!is_chordal(g)) return unmet(name, "graph not chordal");
  MetricSummary m = metric_summary(g);
  if (m.diameter < 2) return unmet(name, "no valid t for D < 2");
  if (s.t != m.diameter / 2) return unmet(name, "stretched set must use t = floor(D/2)");
  if (!s.maximal) return unmet(name, "stretched set is not maximal");
  std::vector<VertexSet> xs;
  for (const ConstrainedSeparator& cs : s.separators) xs.push_back(cs.x);
  const bool lhs = m.diameter / 2 == m.radius;
  const bool rhs = m.center == intersection_of(xs);
  TheoremReport r{name};
  r.clauses.push_back(make_clause("floor(D/2) = R iff C = intersection of X_u", lhs == rhs,
                                  "floor(D/2)=R is " + std::string(lhs ? "true" : "false") +
                                      ", C=" + to_string(m.center) +
                                      ", intersection=" + to_string(intersection_of(xs))));
  return r;
}

TheoremReport check_center_intersection(const Graph& g) {
  const std::string name = "center as intersection of separators";
  if (!is_connected(g)) return unmet(name, "graph not connected");
  MetricSummary m = metric_summary(g);
  if (m.diameter < 2) return unmet(name, "no valid t for D < 2");
  if (!is_chordal(g)) return unmet(name, "graph not chordal");
  return check_center_intersection(g, extend_to_maximal(g, build_t_stretched(g, m.diameter / 2)));
}

TheoremReport check_center_separators(const Graph& g, const StretchedSet& s) {
  const std::string name = "separators versus center";
  if (!is_connected(g)) return unmet(name, "graph not connected");
  if (!is_chordal(g)) return unmet(name, "graph not chordal");
  MetricSummary m = metric_summary(g);
  const int fl = m.diameter / 2;
  const int cl = (m.diameter + 1) / 2;
  if (s.t != cl) return unmet(name, "stretched set must use t = ceil(D/2)");
  const VertexSet center = m.center;

  TheoremReport r{name};
  Clause first{"(i) floor(D/2) = R implies C within X_u", fl == m.radius};
  Clause second{"(ii) floor(D/2) = ceil(D/2) = R - 1 implies X_u dominates <C>",
                fl == cl && cl == m.radius - 1};
  Clause third{"(iii) floor(D/2) < ceil(D/2) = R implies X_u within C and X_u - X_v dominates <C>",
               fl < cl && cl == m.radius};
  for (const ConstrainedSeparator& cs : s.separators) {
    const std::string tag = "u=" + std::to_string(cs.u) + " X_u=" + to_string(cs.x);
    if (first.applicable && !center.subset_of(cs.x) && first.holds) {
      first.holds = false;
      first.evidence = tag;
    }
    if (second.applicable && second.holds &&
        !(cs.x.subset_of(center) && dominates_within(g, cs.x, center))) {
      second.holds = false;
      second.evidence = tag;
    }
    if (third.applicable && third.holds) {
      bool ok = cs.x.subset_of(center);
      for (const ConstrainedSeparator& other : s.separators) {
        if (other.u != cs.u) ok = ok && dominates_within(g, cs.x - other.x, center);
      }
      if (!ok) {
        third.holds = false;
        third.evidence = tag;
      }
    }
  }
  r.clauses = {first, second, third};
  return r;
}

Clause check_center_paths(const Graph& g) {
  const VertexSet center = center_of(g);
  Clause c{"induced paths between center vertices stay in the center"};
  std::vector<Vertex> path;
  VertexSet on_path;
  auto walk = [&](auto&& self) -> void {
    if (!c.holds) return;
    const Vertex last = path.back();
    if (path.size() >= 2 && center.contains(last) && !on_path.subset_of(center)) {
      c.holds = false;
      std::ostringstream o;
      for (Vertex v : path) o << v << ' ';
      c.evidence = "path " + o.str();
      return;
    }
    VertexSet earlier = on_path - VertexSet::single(last);
    for (Vertex v : g.neighbors(last) - on_path) {
      if (g.neighbors(v).intersects(earlier)) continue;
      path.push_back(v);
      on_path.insert(v);
      self(self);
      on_path.erase(v);
      path.pop_back();
    }
  };
  for (Vertex s : center) {
    path = {s};
    on_path = VertexSet::single(s);
    walk(walk);
  }
  return c;
}

}  // namespace chordcenter
