#include "chordcenter/suites.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "chordcenter/chordality.hpp"
#include "chordcenter/construct.hpp"
#include "chordcenter/graph_io.hpp"
#include "chordcenter/metrics.hpp"
#include "chordcenter/oracle.hpp"
#include "chordcenter/stretched.hpp"

namespace chordcenter {

std::string to_string(Suite s) {
  switch (s) {
    case Suite::bounds: return "bounds";
    case Suite::center: return "center";
    case Suite::stretched: return "stretched";
    case Suite::selfcentered: return "selfcentered";
    case Suite::roundtrip: return "roundtrip";
    case Suite::all: return "all";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::bounds, Suite::center, Suite::stretched, Suite::selfcentered,
                  Suite::roundtrip, Suite::all}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

void collect(std::vector<std::string>& out, const std::string& prefix,
             const std::vector<Clause>& clauses) {
  for (const Clause& c : clauses) {
    if (c.failed()) out.push_back(prefix + c.name + (c.evidence.empty() ? "" : " [" + c.evidence + "]"));
  }
}

void collect(std::vector<std::string>& out, const TheoremReport& r) {
  if (!r.applicable) {
    out.push_back(r.name + ": hypotheses unmet (" + r.unmet + ")");
    return;
  }
  collect(out, r.name + ": ", r.clauses);
}

template <typename Fn>
void guarded(std::vector<std::string>& out, const std::string& what, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    out.push_back(what + " threw: " + e.what());
  }
}

}  // namespace

std::vector<std::string> bounds_failures(const Graph& g, std::uint64_t& instances) {
  std::vector<std::string> out;
  ++instances;
  guarded(out, "bounds", [&] { collect(out, "bounds: ", check_bounds(g).clauses); });
  return out;
}

std::vector<std::string> stretched_failures(const Graph& g, std::uint64_t& instances) {
  std::vector<std::string> out;
  const MetricSummary m = metric_summary(g);
  const int d = m.diameter;
  const int k = chordality_index(g).k_index;
  const std::vector<std::vector<int>> brute = brute_distances(g);

  for (int t = 1; t <= std::min((d + 1) / 2, d - 1); ++t) {
    const std::string tag = "t=" + std::to_string(t) + ": ";
    ++instances;
    StretchedSet s;
    try {
      s = build_t_stretched(g, t);
    } catch (const std::exception& e) {
      out.push_back(tag + "build failed: " + e.what());
      continue;
    }
    if (brute_check_stretched(g, s.members, t) != StretchVerdict::valid) {
      out.push_back(tag + "oracle rejects " + to_string(s.members));
    }
    guarded(out, tag + "basic properties",
            [&] { collect(out, tag, verify_basic_sds(g, s, k)); });
    guarded(out, tag + "center in balls",
            [&] { collect(out, tag, {verify_center_in_balls(g, s.members)}); });
    guarded(out, tag + "separation", [&] { collect(out, tag, {verify_separation(g, s)}); });

    for (const ConstrainedSeparator& cs : s.separators) {
      ++instances;
      VertexSet sphere;
      for (Vertex w = 0; w < g.order(); ++w) {
        if (brute[static_cast<std::size_t>(cs.u)][static_cast<std::size_t>(w)] == t) sphere.insert(w);
      }
      const auto expected = brute_min_separator(g, cs.u, cs.others, sphere);
      if (!expected || expected->size() != cs.x.size()) {
        out.push_back(tag + "separator size mismatch at u=" + std::to_string(cs.u) + ": flow " +
                      std::to_string(cs.x.size()) + ", brute " +
                      (expected ? std::to_string(expected->size()) : std::string("none")));
      }
    }

    try {
      StretchedSet big = extend_to_maximal(g, s);
      if (!s.members.subset_of(big.members) || !big.maximal) {
        out.push_back(tag + "extension lost members");
      } else if (brute_check_stretched(g, big.members, t) != StretchVerdict::valid) {
        out.push_back(tag + "oracle rejects maximal " + to_string(big.members));
      }
    } catch (const std::exception& e) {
      out.push_back(tag + "extension failed: " + e.what());
    }
  }

  ++instances;
  guarded(out, "center hull", [&] { collect(out, "center hull: ", center_hull(g).clauses); });
  return out;
}

std::vector<std::string> center_failures(const Graph& g, std::uint64_t& instances) {
  std::vector<std::string> out;
  const MetricSummary m = metric_summary(g);
  ++instances;
  guarded(out, "center structure", [&] {
    CenterStructure cs = center_structure_class(g);
    collect(out, "center structure (" + to_string(cs.which) + "): ", cs.report.clauses);
  });
  ++instances;
  collect(out, "", {check_center_paths(g)});
  if (m.diameter >= 2) {
    instances += 2;
    guarded(out, "center intersection", [&] { collect(out, check_center_intersection(g)); });
    guarded(out, "center separators", [&] {
      collect(out, check_center_separators(g, build_t_stretched(g, (m.diameter + 1) / 2)));
    });
  }
  guarded(out, "diameter-3 structure", [&] {
    TheoremReport r = check_diam3_structure(g);
    if (r.applicable) {
      ++instances;
      collect(out, r);
    }
  });
  return out;
}

std::vector<std::string> selfcentered_failures(const Graph& g, std::uint64_t& instances) {
  std::vector<std::string> out;
  ++instances;
  const BruteMetrics bm = brute_metrics(g);
  const bool self = bm.radius == bm.diameter;
  const bool complete = g.edge_count() == g.order() * (g.order() - 1) / 2;
  guarded(out, "self-centered certificate", [&] {
    SelfCenteredCertificate cert = self_centered_certificate(g);
    using Kind = SelfCenteredCertificate::Kind;
    const Kind expected = complete ? Kind::complete : (self ? Kind::family : Kind::none);
    if (cert.kind != expected) {
      out.push_back(std::string("certificate kind disagrees with the oracle (self-centered: ") +
                    (self ? "yes" : "no") + ")");
    }
    if (cert.family) collect(out, "family: ", check_separator_family(g, cert.family->cliques));
  });
  return out;
}

std::vector<std::string> roundtrip_failures(const Graph& g, std::uint64_t& instances) {
  std::vector<std::string> out;
  if (g.order() < 2) return out;
  ++instances;
  guarded(out, "forward", [&] {
    CenterCertificate cert = is_center_of_chordal(g);
    if (!cert.verdict) return;
    if (!recheck_certificate(g, cert)) out.push_back("certificate fails its re-check");
    HostGraph h = build_host(g);
    collect(out, "host (" + h.construction + "): ", h.checks);
    if (!h.verified) out.push_back("host not verified");
    if (brute_metrics(h.host).center != g.vertices()) out.push_back("oracle: C(host) != V(g)");
  });
  const BruteMetrics bm = brute_metrics(g);
  if (bm.center.size() >= 2) {
    ++instances;
    guarded(out, "backward", [&] {
      InducedSubgraph core = induced_subgraph(g, bm.center);
      CenterCertificate cert = is_center_of_chordal(core.graph);
      if (!cert.verdict) {
        out.push_back("<C(H)> = " + to_string(bm.center) + " rejected: " + to_string(cert.reason));
      }
    });
  }
  return out;
}

namespace {

using Checker = std::vector<std::string> (*)(const Graph&, std::uint64_t&);

SuiteResult run_one(Suite suite, const SuiteOptions& options) {
  Checker checker = nullptr;
  GraphFilter filter = GraphFilter::connected_chordal;
  switch (suite) {
    case Suite::bounds: checker = bounds_failures; filter = GraphFilter::connected; break;
    case Suite::stretched: checker = stretched_failures; filter = GraphFilter::connected; break;
    case Suite::center: checker = center_failures; break;
    case Suite::selfcentered: checker = selfcentered_failures; break;
    case Suite::roundtrip: checker = roundtrip_failures; break;
    case Suite::all: throw GraphError("run_one: expand 'all' first");
  }

  SuiteResult result{suite, options.max_n};
  std::atomic<std::uint64_t> graphs{0};
  std::atomic<std::uint64_t> instances{0};
  std::atomic<std::uint64_t> failures{0};
  std::mutex lock;
  for (int n = std::max(1, options.min_n); n <= options.max_n; ++n) {
    for_each_graph(n, filter, options.jobs, [&](const Graph& g) {
      std::uint64_t local = 0;
      std::vector<std::string> bad = checker(g, local);
      ++graphs;
      instances += local;
      if (bad.empty()) return;
      ++failures;
      std::scoped_lock guard(lock);
      if (result.counterexamples.size() < options.keep) {
        std::string detail;
        for (const std::string& line : bad) detail += (detail.empty() ? "" : "; ") + line;
        result.counterexamples.push_back({to_graph6(g), detail});
      }
    });
  }
  result.graphs = graphs;
  result.instances = instances;
  result.failures = failures;
  return result;
}

}  // namespace

std::vector<SuiteResult> run_suite(Suite suite, const SuiteOptions& options) {
  if (options.max_n > kMaxLabelledOrder) {
    throw BudgetExceeded("enumeration is limited to n <= " + std::to_string(kMaxLabelledOrder));
  }
  if (suite != Suite::all) return {run_one(suite, options)};
  std::vector<SuiteResult> out;
  for (Suite s : {Suite::bounds, Suite::center, Suite::stretched, Suite::selfcentered,
                  Suite::roundtrip}) {
    out.push_back(run_one(s, options));
  }
  return out;
}

std::vector<TheoremReport> verify_all(const Graph& g) {
  if (!is_connected(g)) throw GraphError("verify: graph not connected");
  std::vector<TheoremReport> out;
  const MetricSummary m = metric_summary(g);
  const int d = m.diameter;
  const int k = chordality_index(g).k_index;

  BoundsReport b = check_bounds(g);
  out.push_back({"radius and diameter bounds", true, {}, b.clauses});
  out.push_back({"connected hull of the center", true, {}, center_hull(g).clauses});

  for (int t = 1; t <= std::min((d + 1) / 2, d - 1); ++t) {
    TheoremReport r{"t-stretched set, t=" + std::to_string(t)};
    try {
      StretchedSet s = build_t_stretched(g, t);
      Clause def{"C1 and C2 hold for " + to_string(s.members)};
      def.holds = check_t_stretched(g, s.members, t).ok();
      r.clauses.push_back(def);
      for (const Clause& c : verify_basic_sds(g, s, k)) r.clauses.push_back(c);
      r.clauses.push_back(verify_center_in_balls(g, s.members));
      r.clauses.push_back(verify_separation(g, s));
      StretchedSet big = extend_to_maximal(g, s);
      Clause ext{"extends to maximal " + to_string(big.members)};
      r.clauses.push_back(ext);
    } catch (const StretchFailure& e) {
      Clause c{"construction succeeds"};
      c.holds = false;
      c.evidence = e.what();
      r.clauses.push_back(c);
    }
    out.push_back(r);
  }

  if (!is_chordal(g)) {
    for (const char* name : {"center structure", "center paths", "center as intersection of separators",
                             "separators versus center", "diameter-3 separator family",
                             "self-centered certificate"}) {
      TheoremReport r{name};
      r.applicable = false;
      r.unmet = "graph not chordal";
      out.push_back(r);
    }
    return out;
  }

  CenterStructure cs = center_structure_class(g);
  cs.report.name += " (" + to_string(cs.which) + ")";
  out.push_back(cs.report);
  out.push_back({"center paths", true, {}, {check_center_paths(g)}});
  if (d >= 2) {
    out.push_back(check_center_intersection(g));
    out.push_back(check_center_separators(g, build_t_stretched(g, (d + 1) / 2)));
  }
  out.push_back(check_diam3_structure(g));

  TheoremReport sc{"self-centered certificate"};
  if (m.radius != m.diameter) {
    sc.applicable = false;
    sc.unmet = "graph not self-centered";
  } else {
    SelfCenteredCertificate cert = self_centered_certificate(g);
    Clause found{"complete or separator family found"};
    found.holds = cert.kind != SelfCenteredCertificate::Kind::none;
    sc.clauses.push_back(found);
    if (cert.family) {
      for (const Clause& c : cert.family->conditions) sc.clauses.push_back(c);
    }
  }
  out.push_back(sc);
  return out;
}

}  // namespace chordcenter
