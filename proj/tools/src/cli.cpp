#include "chordcenter_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "chordcenter/characterize.hpp"
#include "chordcenter/chordality.hpp"
#include "chordcenter/construct.hpp"
#include "chordcenter/graph_io.hpp"
#include "chordcenter/metrics.hpp"
#include "chordcenter/oracle.hpp"
#include "chordcenter/stretched.hpp"
#include "chordcenter/suites.hpp"

namespace chordcenter::cli {

using nlohmann::json;

void to_json(json& j, const Report& r) {
  j = json{{"command", r.command}, {"digest", r.digest}, {"result", r.result}, {"exit_code", r.exit_code}};
}

void from_json(const json& j, Report& r) {
  j.at("command").get_to(r.command);
  j.at("digest").get_to(r.digest);
  r.result = j.at("result");
  j.at("exit_code").get_to(r.exit_code);
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string format = "g6";
  std::string fixture;
  bool json = false;
  int jobs = 1;
  int t = 0;
  bool maximal = false;
  int k = 0;
  int max_n = 6;
  std::string suite = "all";
};

LabeledGraph load(const Options& o, std::istream& in) {
  if (!o.fixture.empty()) {
    if (!o.input.empty()) throw UsageError("give either an input path or --fixture, not both");
    return LabeledGraph{named::figure1(), named::figure1_labels()};
  }
  std::string text;
  if (o.input.empty() || o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(o.input, std::ios::binary);
    if (!file) throw UsageError("cannot read " + o.input);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return parse_graph(text, o.format == "edge-list" ? GraphFormat::edge_list : GraphFormat::graph6);
}

json names(const LabeledGraph& g, VertexSet s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(g.label(v));
  return out;
}

json names(const LabeledGraph& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

json clause_json(const Clause& c) {
  json j{{"name", c.name}, {"applicable", c.applicable}, {"holds", c.holds}};
  if (!c.evidence.empty()) j["evidence"] = c.evidence;
  return j;
}

json clauses_json(const std::vector<Clause>& cs) {
  json out = json::array();
  for (const Clause& c : cs) out.push_back(clause_json(c));
  return out;
}

std::string status(const Clause& c) {
  if (!c.applicable) return "n/a ";
  return c.holds ? "ok  " : "FAIL";
}

std::string clause_lines(const std::vector<Clause>& cs, const std::string& indent) {
  std::string out;
  for (const Clause& c : cs) {
    out += indent + status(c) + " " + c.name;
    if (!c.evidence.empty()) out += " [" + c.evidence + "]";
    out += '\n';
  }
  return out;
}

// -- analyze -------------------------------------------------------------------

Report analyze(const LabeledGraph& lg, std::string& text) {
  const Graph& g = lg.graph;
  json r{{"order", g.order()}, {"edges", g.edge_count()}};
  ChordalityReport ch = chordality_index(g);
  r["chordal"] = ch.is_chordal;
  r["chordality_index"] = ch.k_index;
  if (ch.peo) r["peo"] = names(lg, *ch.peo);
  if (ch.witness_cycle) r["longest_induced_cycle"] = names(lg, *ch.witness_cycle);
  r["connected"] = is_connected(g);

  std::ostringstream o;
  o << "order " << g.order() << ", " << g.edge_count() << " edges\n";
  o << (ch.is_chordal ? "chordal" : "not chordal") << ", chordality index " << ch.k_index << '\n';
  if (ch.witness_cycle) o << "longest induced cycle " << names(lg, *ch.witness_cycle).dump() << '\n';
  if (is_connected(g)) {
    MetricSummary m = metric_summary(g);
    r["radius"] = m.radius;
    r["diameter"] = m.diameter;
    r["center"] = names(lg, m.center);
    json ecc = json::object();
    for (Vertex v = 0; v < g.order(); ++v) ecc[lg.label(v)] = m.ecc[static_cast<std::size_t>(v)];
    r["eccentricity"] = ecc;
    json iterated = json::array();
    for (VertexSet s : m.iterated_centers) iterated.push_back(names(lg, s));
    r["iterated_centers"] = iterated;
    r["self_centered"] = m.radius == m.diameter;
    const bool core_connected = is_connected(induced_subgraph(g, m.center).graph);
    if (core_connected) {
      RadiusDiameter rd = induced_radius_diameter(g, m.center);
      r["center_radius"] = rd.radius;
      r["center_diameter"] = rd.diameter;
    }
    o << "R=" << m.radius << " D=" << m.diameter << " C=" << lg.render(m.center) << '\n';
    if (core_connected) {
      o << "Rad(<C>)=" << r["center_radius"] << " Diam(<C>)=" << r["center_diameter"] << '\n';
    }
  } else {
    o << "not connected\n";
  }
  text = o.str();
  return {"analyze", to_graph6(g), r, kPass};
}

// -- check-center ------------------------------------------------------------

Report check_center(const LabeledGraph& lg, std::string& text) {
  const Graph& g = lg.graph;
  CenterCertificate cert = is_center_of_chordal(g);
  json r{{"verdict", cert.verdict ? "yes" : "no"}};
  std::ostringstream o;
  o << "verdict " << (cert.verdict ? "yes" : "no");
  if (!cert.verdict) {
    r["reason"] = to_string(cert.reason);
    o << " (" << to_string(cert.reason) << ")";
  }
  o << '\n';
  if (cert.cliques) {
    r["certificate"] = {{"kind", "disjoint-dominating-cliques"},
                        {"first", names(lg, cert.cliques->first)},
                        {"second", names(lg, cert.cliques->second)}};
    o << "disjoint dominating cliques " << lg.render(cert.cliques->first) << " and "
      << lg.render(cert.cliques->second) << '\n';
  }
  if (cert.self_centered) {
    json c{{"kind", "self-centered-center"}, {"center", names(lg, cert.self_centered->center)}};
    o << "center " << lg.render(cert.self_centered->center) << " is self-centered with radius 2\n";
    if (cert.self_centered->family) {
      json fam = json::array();
      for (VertexSet x : cert.self_centered->family->cliques) {
        fam.push_back(names(lg, x));
        o << "  separator clique " << lg.render(x) << '\n';
      }
      c["family"] = fam;
    }
    r["certificate"] = c;
  }
  if (cert.verdict) r["recheck"] = recheck_certificate(g, cert);
  text = o.str();
  return {"check-center", to_graph6(g), r, cert.verdict ? kPass : kFail};
}

// -- construct-host -----------------------------------------------------------

Report construct_host(const LabeledGraph& lg, int k, std::string& text) {
  const Graph& g = lg.graph;
  HostGraph h = k > 0 ? host_kchordal(g, k) : build_host(g);
  json embedding = json::object();
  for (Vertex v = 0; v < g.order(); ++v) {
    embedding[lg.label(v)] = h.embedding[static_cast<std::size_t>(v)];
  }
  json added = json::array();
  for (const AddedVertex& a : h.added) {
    added.push_back({{"name", a.name}, {"index", a.index}, {"attached", a.attached.to_vector()}});
  }
  json r{{"construction", h.construction}, {"host", to_graph6(h.host)},
         {"host_order", h.host.order()}, {"embedding", embedding},
         {"added", added}, {"checks", clauses_json(h.checks)},
         {"verified", h.verified}};
  std::ostringstream o;
  o << h.construction << " host on " << h.host.order() << " vertices: " << to_graph6(h.host) << '\n';
  for (const AddedVertex& a : h.added) o << "  " << a.name << " = " << a.index << " ~ " << to_string(a.attached) << '\n';
  o << clause_lines(h.checks, "  ");
  o << (h.verified ? "verified" : "NOT verified") << '\n';
  text = o.str();
  return {"construct-host", to_graph6(g), r, h.verified ? kPass : kFail};
}

// -- stretch -------------------------------------------------------------------

Report stretch(const LabeledGraph& lg, int t, bool maximal, std::string& text) {
  const Graph& g = lg.graph;
  StretchedSet s = build_t_stretched(g, t);
  if (maximal) s = extend_to_maximal(g, s);
  json seps = json::array();
  std::ostringstream o;
  o << "t=" << t << " T=" << lg.render(s.members) << (s.maximal ? " (maximal)" : "") << '\n';
  for (const ConstrainedSeparator& cs : s.separators) {
    seps.push_back({{"u", lg.label(cs.u)},
                    {"x", names(lg, cs.x)},
                    {"w_u", names(lg, cs.w_u)},
                    {"w_rest", names(lg, cs.w_rest)}});
    o << "  u=" << lg.label(cs.u) << " X_u=" << lg.render(cs.x) << " W_u=" << lg.render(cs.w_u)
      << " W_rest=" << lg.render(cs.w_rest) << '\n';
  }
  json r{{"t", t}, {"members", names(lg, s.members)}, {"maximal", s.maximal},
         {"swaps", s.swaps}, {"separators", seps}};
  text = o.str();
  return {"stretch", to_graph6(g), r, kPass};
}

// -- verify --------------------------------------------------------------------

Report verify(const LabeledGraph& lg, std::string& text) {
  const Graph& g = lg.graph;
  std::vector<TheoremReport> reports = verify_all(g);
  json arr = json::array();
  bool ok = true;
  std::ostringstream o;
  for (const TheoremReport& t : reports) {
    json j{{"name", t.name}, {"applicable", t.applicable}, {"clauses", clauses_json(t.clauses)}};
    o << t.name;
    if (!t.applicable) {
      j["unmet"] = t.unmet;
      o << ": not applicable (" << t.unmet << ")\n";
    } else {
      o << '\n' << clause_lines(t.clauses, "  ");
      ok = ok && t.ok();
    }
    arr.push_back(j);
  }
  o << (ok ? "all applicable clauses hold" : "some clause FAILED") << '\n';
  text = o.str();
  return {"verify", to_graph6(g), json{{"reports", arr}, {"ok", ok}}, ok ? kPass : kFail};
}

// -- enumerate ----------------------------------------------------------------

Report enumerate(const Options& opt, std::string& text) {
  auto suite = parse_suite(opt.suite);
  if (!suite) throw UsageError("unknown suite " + opt.suite);
  if (opt.max_n < 1) throw UsageError("--max-n must be at least 1");
  SuiteOptions so;
  so.max_n = opt.max_n;
  so.jobs = std::max(1, opt.jobs);
  std::vector<SuiteResult> results = run_suite(*suite, so);

  json arr = json::array();
  bool ok = true;
  std::ostringstream o;
  for (const SuiteResult& s : results) {
    json ce = json::array();
    for (const Counterexample& c : s.counterexamples) ce.push_back({{"graph6", c.graph6}, {"detail", c.detail}});
    arr.push_back({{"suite", to_string(s.suite)}, {"max_n", s.max_n}, {"graphs", s.graphs},
                   {"checks", s.instances}, {"counterexamples", s.failures}, {"examples", ce}});
    o << to_string(s.suite) << ": " << s.graphs << " graphs, " << s.instances << " checks, "
      << s.failures << " counterexamples\n";
    for (const Counterexample& c : s.counterexamples) o << "  " << c.graph6 << "  " << c.detail << '\n';
    ok = ok && s.ok();
  }
  text = o.str();
  return {"enumerate", "", json{{"suites", arr}, {"ok", ok}}, ok ? kPass : kFail};
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "Graph file, or - for stdin");
  cmd->add_option("--format", o.format, "Input format")
      ->check(CLI::IsMember({"g6", "edge-list"}));
  cmd->add_option("--fixture", o.fixture, "Built-in graph instead of an input")
      ->check(CLI::IsMember({"fig1"}));
}

}  // namespace

CommandOutput run_command(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Center structure of chordal and k-chordal graphs", "chordcenter"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_flag("--json", o.json, "Print the report as JSON")->configurable(false);
  app.add_option("--jobs", o.jobs, "Worker threads for enumerate")->check(CLI::PositiveNumber);

  auto* analyze_cmd = app.add_subcommand("analyze", "Metrics and chordality");
  auto* center_cmd = app.add_subcommand("check-center", "Is the graph the center of a chordal graph?");
  auto* host_cmd = app.add_subcommand("construct-host", "Build a graph whose center is the input");
  auto* stretch_cmd = app.add_subcommand("stretch", "Build a t-stretched diametrical set");
  auto* verify_cmd = app.add_subcommand("verify", "Check every applicable property");
  auto* enum_cmd = app.add_subcommand("enumerate", "Exhaustive property suites over small graphs");
  for (CLI::App* cmd : {analyze_cmd, center_cmd, host_cmd, stretch_cmd, verify_cmd}) add_input(cmd, o);
  for (CLI::App* cmd : app.get_subcommands({})) cmd->fallthrough();
  host_cmd->add_option("--k", o.k, "Use the universal-vertex construction for this k >= 4");
  stretch_cmd->add_option("--t", o.t, "Stretch parameter")->required();
  stretch_cmd->add_flag("--maximal", o.maximal, "Extend to a maximal set");
  enum_cmd->add_option("--max-n", o.max_n, "Largest order enumerated")->required();
  enum_cmd->add_option("--suite", o.suite, "Property suite")
      ->check(CLI::IsMember({"bounds", "center", "stretched", "selfcentered", "roundtrip", "all"}));

  CommandOutput out;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out.out = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    out.err = std::string(e.what()) + "\n";
    out.exit_code = kUsage;
    return out;
  }

  std::string text;
  try {
    if (*enum_cmd) {
      out.report = enumerate(o, text);
    } else {
      LabeledGraph lg = load(o, in);
      if (*analyze_cmd) out.report = analyze(lg, text);
      else if (*center_cmd) out.report = check_center(lg, text);
      else if (*host_cmd) out.report = construct_host(lg, o.k, text);
      else if (*stretch_cmd) out.report = stretch(lg, o.t, o.maximal, text);
      else out.report = verify(lg, text);
    }
  } catch (const StretchFailure& e) {
    out.err = std::string("stretch construction failed: ") + e.what() + "\n";
    out.exit_code = kFail;
    return out;
  } catch (const ConstructionError& e) {
    out.err = std::string(e.what()) + "\n";
    out.exit_code = kFail;
    return out;
  } catch (const std::exception& e) {
    out.err = std::string("error: ") + e.what() + "\n";
    out.exit_code = kUsage;
    return out;
  }
  out.exit_code = out.report.exit_code;
  out.out = o.json ? json(out.report).dump(2) + "\n" : text;
  return out;
}

}  // namespace chordcenter::cli
