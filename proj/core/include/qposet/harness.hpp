#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qposet/enumerate.hpp"

namespace qposet {

struct HarnessSpec {
  std::size_t min_n = 1;
  /// Bound for ortho, lattice and bounded-poset sweeps.
  std::size_t max_n = 6;
  /// Section families multiply fast, so sectioned sweeps stop earlier.
  std::size_t sectioned_max_n = 6;
  std::size_t jobs = 1;
};

struct HarnessViolation {
  std::string instance;  ///< Instance::code
  std::string detail;    ///< clause and witness, with element labels
};

struct HarnessResult {
  std::string id;
  std::string universe;     ///< enumerated class and size range
  std::size_t instances = 0;   ///< structures enumerated
  std::size_t applicable = 0;  ///< structures meeting the hypothesis
  std::vector<HarnessViolation> violations;
  double wall_ms = 0;

  bool passed() const { return violations.empty(); }
};

/// Known theorem ids, in report order.
const std::vector<std::string>& theorem_ids();

/// Runs each theorem over its enumerated universe. Unknown ids throw
/// UnknownName. Results come back in the order of `ids`, independent of
/// `spec.jobs`.
std::vector<HarnessResult> run_harness(const HarnessSpec& spec, const std::vector<std::string>& ids);

/// One record per theorem. Wall times are left out so that equal specs give
/// byte-identical reports.
std::string report_json(const HarnessSpec& spec, const std::vector<HarnessResult>& results);
/// Aligned text summary, wall times included.
std::string report_text(const std::vector<HarnessResult>& results);

}  // namespace qposet
