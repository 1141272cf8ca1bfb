#include "chordcenter/stretched.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "chordcenter/metrics.hpp"

namespace chordcenter {

bool StretchCheck::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const MemberCheck& m) { return m.c1 && m.c2; });
}

std::optional<Vertex> StretchCheck::first_failure() const {
  for (const MemberCheck& m : checks) {
    if (!m.c1 || !m.c2) return m.u;
  }
  return std::nullopt;
}

const ConstrainedSeparator& StretchedSet::at(Vertex u) const {
  for (const ConstrainedSeparator& cs : separators) {
    if (cs.u == u) return cs;
  }
  throw GraphError("StretchedSet::at: " + std::to_string(u) + " is not a member");
}

namespace {

int diameter_of(const DistanceMatrix& dm) {
  std::vector<int> ecc = eccentricities(dm);
  return *std::max_element(ecc.begin(), ecc.end());
}

void require_stretch_inputs(const Graph& g, const DistanceMatrix& dm, int diameter,
                            VertexSet t_set, int t) {
  g.check_subset(t_set);
  if (!dm.connected()) throw GraphError("t-stretched sets need a connected graph");
  if (t < 1 || t > diameter - 1) {
    throw GraphError("stretch parameter t=" + std::to_string(t) + " outside [1, D-1] with D=" +
                     std::to_string(diameter));
  }
  if (!is_diametrical(dm, diameter, t_set)) {
    throw GraphError("vertex set " + to_string(t_set) + " is not diametrical");
  }
}

/// All w violating C2 for member u with separator x.
VertexSet c2_violators(const Graph& g, const DistanceMatrix& dm, int diameter, int t,
                       const ConstrainedSeparator& cs) {
  VertexSet out;
  VertexSet cut_off = g.vertices() - cs.x - cs.w_rest;
  for (Vertex w : cut_off) {
    if (dm.to_set(w, cs.others) != diameter) continue;
    bool far_member = std::any_of(cs.x.begin(), cs.x.end(),
                                  [&](Vertex x) { return dm.hops(w, x) > t; });
    if (far_member && *dm.to_set(w, cs.x) >= t) out.insert(w);
  }
  return out;
}

bool c1_holds(const Graph& g, const DistanceMatrix& dm, VertexSet others, Vertex u, int t) {
  VertexSet sphere = dm.ring(VertexSet::single(u), t);
  if (others.intersects(sphere)) return false;
  return others.subset_of(component_of(g, sphere, others.front()));
}

StretchCheck check_with_frame(const Graph& g, const DistanceMatrix& dm, int diameter,
                              VertexSet t_set, int t) {
  StretchCheck out{t_set, t, {}};
  for (Vertex u : t_set) {
    VertexSet others = t_set - VertexSet::single(u);
    std::optional<ConstrainedSeparator> cs = min_separator_within(g, dm, u, others, t);
    if (!cs) {
      throw GraphError("internal: N(u,t) does not separate u from T-u for u=" + std::to_string(u));
    }
    out.checks.push_back(check_member(g, dm, diameter, t_set, t, u, cs->x));
  }
  return out;
}

std::string describe(VertexSet s, int t) {
  std::ostringstream o;
  o << "T=" << to_string(s) << " t=" << t;
  return o.str();
}

StretchedSet repair(const Graph& g, const DistanceMatrix& dm, int diameter, VertexSet start,
                    int t) {
  VertexSet current = start;
  std::set<std::uint64_t> visited{current.bits()};
  int swaps = 0;
  while (true) {
    StretchCheck check = check_with_frame(g, dm, diameter, current, t);
    if (check.ok()) {
      StretchedSet out{current, t, {}, false, swaps};
      for (const MemberCheck& m : check.checks) out.separators.push_back(*m.separator);
      return out;
    }
    Vertex v = *check.first_failure();
    const MemberCheck& failing = *std::find_if(check.checks.begin(), check.checks.end(),
                                               [v](const MemberCheck& m) { return m.u == v; });
    if (!failing.c1) {
      throw StretchFailure("C1 fails for member " + std::to_string(v) + " of " +
                               describe(current, t),
                           current);
    }
    VertexSet rest = current - VertexSet::single(v);
    std::optional<Vertex> best;
    int best_size = -1;
    for (Vertex w : c2_violators(g, dm, diameter, t, *failing.separator)) {
      VertexSet sphere = dm.ring(VertexSet::single(w), t);
      if (rest.intersects(sphere)) continue;
      VertexSet comp = component_of(g, sphere, rest.front());
      if (!rest.subset_of(comp)) continue;
      if (comp.size() > best_size) {
        best = w;
        best_size = comp.size();
      }
    }
    if (!best) {
      throw StretchFailure("no replacement witness for member " + std::to_string(v) + " of " +
                               describe(current, t),
                           current);
    }
    current = rest | VertexSet::single(*best);
    ++swaps;
    if (!visited.insert(current.bits()).second) {
      throw StretchFailure("swap procedure revisits " + describe(current, t), current);
    }
  }
}

}  // namespace

MemberCheck check_member(const Graph& g, const DistanceMatrix& dm, int diameter, VertexSet t_set,
                         int t, Vertex u, VertexSet x) {
  MemberCheck m;
  m.u = u;
  VertexSet others = t_set - VertexSet::single(u);
  m.c1 = c1_holds(g, dm, others, u, t);
  if (!m.c1) return m;
  ConstrainedSeparator cs = bind_separator(g, u, others, t, x);
  VertexSet bad = c2_violators(g, dm, diameter, t, cs);
  m.c2 = bad.empty();
  if (!bad.empty()) m.violator = bad.front();
  m.separator = cs;
  return m;
}

StretchCheck check_t_stretched(const Graph& g, const DistanceMatrix& dm, VertexSet t_set, int t) {
  int diameter = diameter_of(dm);
  require_stretch_inputs(g, dm, diameter, t_set, t);
  return check_with_frame(g, dm, diameter, t_set, t);
}

StretchCheck check_t_stretched(const Graph& g, VertexSet t_set, int t) {
  return check_t_stretched(g, DistanceMatrix(g), t_set, t);
}

StretchedSet repair_t_stretched(const Graph& g, VertexSet start, int t) {
  DistanceMatrix dm(g);
  int diameter = diameter_of(dm);
  require_stretch_inputs(g, dm, diameter, start, t);
  return repair(g, dm, diameter, start, t);
}

StretchedSet build_t_stretched(const Graph& g, int t) {
  DistanceMatrix dm(g);
  if (!dm.connected()) throw GraphError("build_t_stretched: graph not connected");
  int diameter = diameter_of(dm);
  if (t < 1 || t > diameter - 1 || t > (diameter + 1) / 2) {
    throw GraphError("build_t_stretched: t=" + std::to_string(t) +
                     " outside [1, min(ceil(D/2), D-1)] with D=" + std::to_string(diameter));
  }
  // Every diametrical pair satisfies C1 (T - u is a single vertex), so the
  // lexicographically first pair is the starting point.
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (dm.hops(u, v) == diameter) return repair(g, dm, diameter, VertexSet{u, v}, t);
    }
  }
  throw GraphError("internal: no diametrical pair");
}

bool admits_extension(const Graph& g, const DistanceMatrix& dm, int diameter, VertexSet t_set,
                      int t, Vertex w) {
  if (t_set.contains(w)) return false;
  for (Vertex u : t_set) {
    if (dm.hops(w, u) != diameter) return false;
  }
  VertexSet sphere = dm.ring(VertexSet::single(w), t);
  return t_set.subset_of(component_of(g, sphere, t_set.front()));
}

StretchedSet extend_to_maximal(const Graph& g, const StretchedSet& s) {
  DistanceMatrix dm(g);
  int diameter = diameter_of(dm);
  require_stretch_inputs(g, dm, diameter, s.members, s.t);
  StretchedSet current = s;
  while (true) {
    bool grown = false;
    bool any_candidate = false;
    for (Vertex w = 0; w < g.order() && !grown; ++w) {
      if (!admits_extension(g, dm, diameter, current.members, current.t, w)) continue;
      any_candidate = true;
      VertexSet bigger = current.members | VertexSet::single(w);
      try {
        StretchedSet next = repair(g, dm, diameter, bigger, current.t);
        if (current.members.subset_of(next.members)) {
          next.swaps += current.swaps;
          current = next;
          grown = true;
        }
      } catch (const StretchFailure&) {
        // Try the next candidate; exhausting all of them is reported below.
      }
    }
    if (grown) continue;
    if (any_candidate) {
      throw StretchFailure("no extension of " + describe(current.members, current.t) +
                               " is t-stretched although a vertex admits extension",
                           current.members);
    }
    current.maximal = true;
    return current;
  }
}

std::vector<Clause> verify_basic_sds(const Graph& g, const StretchedSet& s, int k) {
  DistanceMatrix dm(g);
  std::vector<int> ecc = eccentricities(dm);
  const int diameter = *std::max_element(ecc.begin(), ecc.end());
  const int t = s.t;
  const int half_k = k / 2;
  const int floor_d = diameter / 2;
  const int ceil_d = (diameter + 1) / 2;
  if (t > ceil_d) throw GraphError("verify_basic_sds: t exceeds ceil(D/2)");

  Clause c1{"(i) d(x,x') <= floor(k/2) within X_u"};
  Clause c2{"(ii) d(x,w) <= t + floor(k/2) - 1 outside W_{T-u}"};
  Clause c3{"(iii) X_v misses W_u", t <= floor_d};
  Clause c4{"(iv) d(X_u,X_v) = D - 2 floor(D/2)", t == floor_d};
  Clause c5{"(v) ecc(x) <= floor(D/2) + floor(k/2)", t == ceil_d};
  auto fail = [](Clause& c, const std::string& why) {
    if (c.holds) c.evidence = why;
    c.holds = false;
  };

  for (const ConstrainedSeparator& cs : s.separators) {
    const std::string tag = "u=" + std::to_string(cs.u);
    for (Vertex x : cs.x) {
      for (Vertex y : cs.x) {
        if (dm.hops(x, y) > half_k) {
          fail(c1, tag + " x=" + std::to_string(x) + " x'=" + std::to_string(y));
        }
      }
      for (Vertex w : g.vertices() - cs.w_rest) {
        if (dm.hops(x, w) > t + half_k - 1) {
          fail(c2, tag + " x=" + std::to_string(x) + " w=" + std::to_string(w));
        }
      }
      if (c5.applicable && ecc[static_cast<std::size_t>(x)] > floor_d + half_k) {
        fail(c5, tag + " x=" + std::to_string(x) + " ecc=" +
                     std::to_string(ecc[static_cast<std::size_t>(x)]));
      }
    }
    for (const ConstrainedSeparator& other : s.separators) {
      if (other.u == cs.u) continue;
      const std::string pair = tag + " v=" + std::to_string(other.u);
      if (c3.applicable && other.x.intersects(cs.w_u)) fail(c3, pair);
      if (c4.applicable && dm.between(cs.x, other.x) != diameter - 2 * floor_d) fail(c4, pair);
    }
  }
  return {c1, c2, c3, c4, c5};
}

Clause verify_center_in_balls(const Graph& g, VertexSet t_set) {
  MetricSummary m = metric_summary(g);
  DistanceMatrix dm(g);
  Clause c{"center lies within distance R of every member of T"};
  for (Vertex u : t_set) {
    VertexSet outside = m.center - dm.ball(VertexSet::single(u), m.radius);
    if (!outside.empty()) {
      c.holds = false;
      c.evidence = "u=" + std::to_string(u) + " misses " + to_string(outside);
      break;
    }
  }
  return c;
}

Clause verify_separation(const Graph& g, const StretchedSet& s) {
  DistanceMatrix dm(g);
  const int diameter = diameter_of(dm);
  Clause c{"X_u misses W_v for floor(D/2)-stretched T", s.t == diameter / 2};
  if (!c.applicable) return c;
  for (const ConstrainedSeparator& a : s.separators) {
    for (const ConstrainedSeparator& b : s.separators) {
      if (a.u != b.u && a.x.intersects(b.w_u)) {
        c.holds = false;
        c.evidence = "u=" + std::to_string(a.u) + " v=" + std::to_string(b.u);
        return c;
      }
    }
  }
  return c;
}

}  // namespace chordcenter
