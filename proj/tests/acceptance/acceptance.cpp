// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>

#include "chordcenter/characterize.hpp"
#include "chordcenter/chordality.hpp"
#include "chordcenter/construct.hpp"
#include "chordcenter/graph_io.hpp"
#include "chordcenter/metrics.hpp"
#include "chordcenter/oracle.hpp"
#include "chordcenter/stretched.hpp"
#include "chordcenter/suites.hpp"
#include "chordcenter_cli/cli.hpp"

using namespace chordcenter;

namespace {

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// Collects failures from worker threads; keeps the first few for the report.
class Tally {
 public:
  void fail(const Graph& g, const std::string& what) {
    ++failures_;
    std::scoped_lock guard(lock_);
    if (examples_.size() < 3) examples_.push_back(to_graph6(g) + " " + what);
  }
  void count(std::uint64_t n = 1) { checks_ += n; }
  std::uint64_t failures() const { return failures_; }
  std::uint64_t checks() const { return checks_; }
  std::string summary() const {
    std::string s = std::to_string(checks_.load()) + " checks, " + std::to_string(failures_.load()) + " failures";
    for (const auto& e : examples_) s += "; " + e;
    return s;
  }

 private:
  std::atomic<std::uint64_t> failures_{0};
  std::atomic<std::uint64_t> checks_{0};
  std::mutex lock_;
  std::vector<std::string> examples_;
};

void over(int min_n, int max_n, GraphFilter filter, const std::function<void(const Graph&)>& fn) {
  for (int n = min_n; n <= max_n; ++n) for_each_graph(n, filter, jobs(), fn);
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failed_criteria = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failed_criteria;
  std::printf("%s criterion %d: %s (%s; %.2f s)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(),
              o.detail.c_str(), sec);
  std::fflush(stdout);
}

Outcome fixture() {
  const auto start = std::chrono::steady_clock::now();
  Graph f = named::figure1();
  auto label = [](std::initializer_list<int> ls) {
    VertexSet s;
    for (int l : ls) s.insert(l - 1);
    return s;
  };
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };

  expect(is_chordal(f) && brute_longest_induced_cycle(f).length == 3, "chordal");
  bool two_connected = is_connected(f);
  for (Vertex v = 0; v < f.order(); ++v) {
    two_connected = two_connected && components_after_removal(f, VertexSet::single(v)).size() == 1;
  }
  expect(two_connected, "2-connected");
  BruteMetrics bm = brute_metrics(f);
  MetricSummary m = metric_summary(f);
  expect(m.radius == 2 && bm.radius == 2, "R=2");
  expect(m.diameter == 3 && bm.diameter == 3, "D=3");
  expect(m.center == label({3, 5, 8, 9}) && bm.center == m.center, "C={3,5,8,9}");
  InducedSubgraph core = induced_subgraph(f, m.center);
  expect(core.graph == named::complete(4), "<C> is K4");
  expect(brute_metrics(core.graph).radius == 1, "Rad(<C>)=1");
  expect(!disjoint_dominating_cliques(f).has_value(), "no disjoint dominating cliques");

  std::istringstream in;
  cli::CommandOutput out = cli::run_command({"check-center", "--fixture", "fig1", "--json"}, in);
  auto j = nlohmann::json::parse(out.out);
  expect(out.exit_code == 1 && j["result"]["verdict"] == "no" && j["result"]["reason"] == "no-structure",
         "check-center verdict no");

  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect(sec < 1.0, "runtime < 1 s");
  std::string detail = bad.empty() ? "all facts match" : "";
  for (const auto& b : bad) detail += (detail.empty() ? "failed: " : ", ") + b;
  return {bad.empty(), detail};
}

Outcome suite_outcome(Suite s, int max_n) {
  SuiteOptions o;
  o.max_n = max_n;
  o.jobs = jobs();
  SuiteResult r = run_suite(s, o)[0];
  std::string detail = std::to_string(r.graphs) + " graphs, " + std::to_string(r.instances) +
                       " checks, " + std::to_string(r.failures) + " counterexamples";
  for (const auto& c : r.counterexamples) detail += "; " + c.graph6 + " " + c.detail;
  return {r.ok() && r.graphs > 0, detail};
}

Outcome round_trip() {
  Tally forward, backward;
  over(2, 6, GraphFilter::connected_chordal, [&](const Graph& g) {
    CenterCertificate cert = is_center_of_chordal(g);
    if (!cert.verdict) return;
    forward.count();
    try {
      HostGraph h = build_host(g);
      BruteMetrics hm = brute_metrics(h.host);
      if (!h.verified || hm.center != g.vertices() || brute_longest_induced_cycle(h.host).length > 3) {
        forward.fail(g, "host not verified");
      }
    } catch (const std::exception& e) {
      forward.fail(g, e.what());
    }
  });
  over(1, 7, GraphFilter::connected_chordal, [&](const Graph& h) {
    BruteMetrics bm = brute_metrics(h);
    if (bm.center.size() < 2) return;
    backward.count();
    if (!is_center_of_chordal(induced_subgraph(h, bm.center).graph).verdict) backward.fail(h, "<C(H)> rejected");
  });
  return {forward.failures() == 0 && backward.failures() == 0 && forward.checks() > 0 && backward.checks() > 0,
          "forward: " + forward.summary() + "; backward: " + backward.summary()};
}

Outcome self_centered() {
  Tally t;
  over(1, 7, GraphFilter::connected_chordal, [&](const Graph& g) {
    t.count();
    BruteMetrics bm = brute_metrics(g);
    const bool self = bm.radius == bm.diameter;
    const bool complete = g.edge_count() == g.order() * (g.order() - 1) / 2;
    SelfCenteredCertificate cert = self_centered_certificate(g);
    const bool family = cert.kind == SelfCenteredCertificate::Kind::family;
    if (family != (self && !complete)) t.fail(g, "family returned iff self-centered and not complete");
    if (complete != (cert.kind == SelfCenteredCertificate::Kind::complete)) t.fail(g, "complete kind");
    if (cert.family) {
      // Re-verification from the definitions, independent of the stored clauses.
      const auto& xs = cert.family->cliques;
      bool ok = g.max_degree() <= g.order() - 2 && xs.size() >= 3;
      VertexSet uni, inter = g.vertices();
      for (VertexSet x : xs) {
        uni |= x;
        inter &= x;
        ok = ok && is_clique(g, x) && components_after_removal(g, x).size() >= 2;
        for (Vertex z = 0; z < g.order(); ++z) ok = ok && g.neighbors(z).intersects(x);
        for (VertexSet y : xs) ok = ok && x.intersects(y);
      }
      ok = ok && inter.empty();
      for (Vertex z = 0; z < g.order(); ++z) {
        for (Vertex w = z + 1; w < g.order(); ++w) ok = ok && (g.neighbors(z) & g.neighbors(w)).intersects(uni);
      }
      if (!ok) t.fail(g, "family fails re-verification");
    }
  });
  return {t.failures() == 0, t.summary()};
}

// Criteria 6 and 7 share the same instances.
struct StretchTallies {
  Tally build;
  Tally separators;
};

StretchTallies& stretch_run() {
  static StretchTallies tallies;
  static std::once_flag once;
  std::call_once(once, [] {
    over(1, 6, GraphFilter::connected, [](const Graph& g) {
      const int d = brute_metrics(g).diameter;
      const int k = std::max(3, brute_longest_induced_cycle(g).length);
      auto dist = brute_distances(g);
      for (int t = 1; t <= std::min((d + 1) / 2, d - 1); ++t) {
        tallies.build.count();
        StretchedSet s;
        try {
          s = build_t_stretched(g, t);
        } catch (const std::exception& e) {
          tallies.build.fail(g, "t=" + std::to_string(t) + " build: " + e.what());
          continue;
        }
        if (brute_check_stretched(g, s.members, t) != StretchVerdict::valid) {
          tallies.build.fail(g, "t=" + std::to_string(t) + " oracle rejects");
        }
        if (!all_hold(verify_basic_sds(g, s, k))) tallies.build.fail(g, "t=" + std::to_string(t) + " basic properties");
        for (const ConstrainedSeparator& cs : s.separators) {
          tallies.separators.count();
          VertexSet sphere;
          for (Vertex w = 0; w < g.order(); ++w) {
            if (dist[static_cast<std::size_t>(cs.u)][static_cast<std::size_t>(w)] == t) sphere.insert(w);
          }
          auto oracle = brute_min_separator(g, cs.u, cs.others, sphere);
          if (!oracle || oracle->size() != cs.x.size()) tallies.separators.fail(g, "size mismatch");
        }
      }
    });
  });
  return tallies;
}

Outcome constructions() {
  Tally two, pendant, kchordal;
  // Every graph with clique evidence, and every candidate the pendant host
  // accepts, up to n = 7.
  over(2, 7, GraphFilter::connected_chordal, [&](const Graph& g) {
    CenterCertificate cert = is_center_of_chordal(g);
    if (cert.cliques) {
      two.count();
      HostGraph h = host_two_cliques(g, cert.cliques->first, cert.cliques->second);
      const Vertex n = g.order();
      auto d = brute_distances(h.host);
      BruteMetrics hm = brute_metrics(h.host);
      bool ok = h.verified && hm.radius == 3 && hm.diameter == 5 && d[static_cast<std::size_t>(n)][static_cast<std::size_t>(n + 3)] == 4 &&
                d[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(n + 3)] == 5;
      for (Vertex y = 0; y < n; ++y) ok = ok && hm.ecc[static_cast<std::size_t>(y)] == 3;
      if (!ok) two.fail(g, "two-cliques table");
    }
    MetricSummary m = metric_summary(g);
    InducedSubgraph core = induced_subgraph(g, m.center);
    if (m.diameter <= 3 && is_connected(core.graph) && metric_summary(core.graph).radius == 2) {
      pendant.count();
      HostGraph h = host_pendant(g);
      BruteMetrics hm = brute_metrics(h.host);
      bool ok = h.verified && hm.center == g.vertices();
      for (Vertex a = 0; a < g.order(); ++a) {
        if (m.ecc[static_cast<std::size_t>(a)] == 2) ok = ok && hm.ecc[static_cast<std::size_t>(a)] == 3;
      }
      for (const AddedVertex& w : h.added) ok = ok && hm.ecc[static_cast<std::size_t>(w.index)] == 4;
      if (!ok) pendant.fail(g, "pendant table");
    }
  });
  for (int k = 4; k <= 6; ++k) {
    over(1, 5, GraphFilter::connected, [&](const Graph& g) {
      if (chordality_index(g).k_index > k) return;
      kchordal.count();
      HostGraph h = host_kchordal(g, k);
      const bool ok = h.verified && brute_metrics(h.host).center == g.vertices() &&
                      brute_longest_induced_cycle(h.host).length <= k;
      if (!ok) kchordal.fail(g, "k=" + std::to_string(k));
    });
  }
  const bool pass = two.failures() == 0 && pendant.failures() == 0 && kchordal.failures() == 0 &&
                    two.checks() > 0 && pendant.checks() > 0 && kchordal.checks() > 0;
  return {pass, "two-cliques: " + two.summary() + "; pendant: " + pendant.summary() +
                    "; k-chordal: " + kchordal.summary()};
}

Outcome hull() {
  Tally t;
  over(1, 6, GraphFilter::connected, [&](const Graph& g) {
    t.count();
    const int k = std::max(3, brute_longest_induced_cycle(g).length);
    CenterHull h = center_hull(g);
    BruteMetrics bm = brute_metrics(g);
    InducedSubgraph sub = induced_subgraph(g, h.vertices);
    if (!bm.center.subset_of(h.vertices)) return t.fail(g, "C(G) outside H");
    if (!is_connected(sub.graph)) return t.fail(g, "H disconnected");
    BruteMetrics hm = brute_metrics(sub.graph);
    if (hm.radius > 2 * (k / 2) || hm.diameter > 3 * (k / 2)) t.fail(g, "H too wide");
    if (!all_hold(h.clauses)) t.fail(g, "clause report disagrees");
  });
  return {t.failures() == 0, t.summary()};
}

}  // namespace

int main() {
  report(1, "fixture facts and check-center verdict", fixture);
  report(2, "radius/diameter bounds, connected n <= 7", [] { return suite_outcome(Suite::bounds, 7); });
  report(3, "chordal center structure, connected chordal n <= 7",
         [] { return suite_outcome(Suite::center, 7); });
  report(4, "center round trip (forward n <= 6, backward n <= 7)", round_trip);
  report(5, "self-centered certificate equivalence, n <= 7", self_centered);
  report(6, "t-stretched existence and basic properties, n <= 6", [] {
    const Tally& b = stretch_run().build;
    return Outcome{b.failures() == 0 && b.checks() > 0, b.summary()};
  });
  report(7, "flow separator equals brute force on criterion 6 instances", [] {
    const Tally& s = stretch_run().separators;
    return Outcome{s.failures() == 0 && s.checks() > 0, s.summary()};
  });
  report(8, "host construction eccentricity tables", constructions);
  report(9, "connected hull of the center, n <= 6", hull);
  std::printf("%d criteria failed\n", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
