#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace chordcenter {

/// Outcome of one checkable statement. A clause that is applicable and does
/// not hold is a counterexample; `evidence` then describes the violation.
struct Clause {
  std::string name;
  bool applicable = true;
  bool holds = true;
  std::string evidence;

  bool failed() const { return applicable && !holds; }
};

inline bool all_hold(const std::vector<Clause>& clauses) {
  return std::none_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.failed(); });
}

}  // namespace chordcenter
