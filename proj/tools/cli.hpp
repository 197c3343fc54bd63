#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qposet::cli {

/// Exit codes shared by every command.
enum Exit : int {
  kOk = 0,
  kFailed = 1,      ///< a predicate is false, a theorem has violations, a counterexample exists
  kBadInput = 2,    ///< usage, file or parse error
  kViolation = 3,   ///< amalgam: predicted and computed verdicts disagree
  kBudget = 4,      ///< search ran out of budget
};

/// Entry point of the `qposet` tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qposet::cli
