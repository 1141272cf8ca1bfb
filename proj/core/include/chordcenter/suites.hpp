#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chordcenter/characterize.hpp"
#include "chordcenter/graph.hpp"

namespace chordcenter {

enum class Suite { bounds, center, stretched, selfcentered, roundtrip, all };
std::string to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

struct Counterexample {
  std::string graph6;
  std::string detail;
};

struct SuiteResult {
  Suite suite = Suite::bounds;
  int max_n = 0;
  std::uint64_t graphs = 0;
  /// Individual checks performed (one graph may yield several).
  std::uint64_t instances = 0;
  std::vector<Counterexample> counterexamples;
  /// Counterexamples found, including those not stored.
  std::uint64_t failures = 0;

  bool ok() const { return failures == 0; }
};

struct SuiteOptions {
  int max_n = 6;
  int min_n = 1;
  int jobs = 1;
  std::size_t keep = 20;
};

// Per-graph checks. Each returns one line per failed property; `instances`
// is bumped once per individual check.

/// Radius/diameter bounds with k = chordality index. Connected g.
std::vector<std::string> bounds_failures(const Graph& g, std::uint64_t& instances);
/// Every valid t: build, oracle confirmation, basic properties, separator
/// size against the brute force, maximal extension; plus the center hull.
/// Connected g, n <= 10.
std::vector<std::string> stretched_failures(const Graph& g, std::uint64_t& instances);
/// Center structure theorems. Connected chordal g.
std::vector<std::string> center_failures(const Graph& g, std::uint64_t& instances);
/// Self-centered certificate against the oracle metrics. Connected chordal g.
std::vector<std::string> selfcentered_failures(const Graph& g, std::uint64_t& instances);
/// Forward host construction and backward center check. Connected chordal g.
std::vector<std::string> roundtrip_failures(const Graph& g, std::uint64_t& instances);

/// Runs the suite over every labelled graph with min_n <= n <= max_n.
/// Suite::all expands to the five suites in order.
std::vector<SuiteResult> run_suite(Suite suite, const SuiteOptions& options);

/// Every applicable check on a single connected graph.
std::vector<TheoremReport> verify_all(const Graph& g);

}  // namespace chordcenter
