#pragma once

#include <string>
#include <vector>

#include "qposet/subset.hpp"

namespace qposet {

struct Violation {
  std::string clause;
  std::vector<Element> witness;
  std::string detail;
};

/// Result of checking a multi-clause statement on one structure. Only the
/// first violation of each clause is kept.
struct CheckReport {
  bool applicable = true;
  std::string skip_reason;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }

  void add(std::string clause, std::vector<Element> witness, std::string detail = {}) {
    for (const auto& v : violations)
      if (v.clause == clause) return;
    violations.push_back({std::move(clause), std::move(witness), std::move(detail)});
  }

  bool violated(const std::string& clause) const {
    for (const auto& v : violations)
      if (v.clause == clause) return true;
    return false;
  }

  static CheckReport skipped(std::string why) {
    CheckReport r;
    r.applicable = false;
    r.skip_reason = std::move(why);
    return r;
  }
};

/// Two independently computed sides of an "equivalent conditions" statement.
struct Equivalence {
  bool left = false;
  bool right = false;
  bool agree() const { return left == right; }
};

}  // namespace qposet
