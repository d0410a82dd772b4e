#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rpf/invset.hpp"
#include "rpf/words.hpp"

namespace rpf {

// Result of one verification suite. Failures carry the offending input
// serialized, so a report is actionable on its own.
struct SuiteReport {
  std::string suite;
  std::string params;
  long long cases = 0;
  std::vector<std::string> failures;
  long long wall_ms = 0;
  std::uint64_t seed = 0;

  bool passed() const { return failures.empty(); }
};

// For every word of [m]^n: the fixed-point search succeeds with period 1
// exactly when the threshold count (recomputed inline, not via the words
// module) says the word parks.
SuiteReport cross_check_parking(int m, int n, long long budget);

// Searches for a set shifted by n under p. Coprime grids scan the
// 0-normalized enumeration; otherwise gap sets inside [1, gap_bound] are
// tried in canonical order.
std::optional<InvariantSet> find_invariant_witness(const ParkingWord& p,
                                                   long long gap_bound);

// Registered suites, one per verified statement:
//   parking-fixed-point   fixed point exists iff the word parks
//   weak-contraction      sampled pairs never move apart
//   norm-sorting          distance preserved iff letters sort both the same
//   removal-generators    shifting words remove n-generators only
//   skeleton-union        generators along a shifting word tile a skeleton
//   monotone-uniqueness   exactly one monotone word shifts each set
//   path-bijection        skeleton paths hit each monotone word once
//   fixed-cycle           the permutation at a fixed point is one m-cycle
//   unit-facet            some intermediate has adjacent coordinates 1 apart
//   absorption            sampled centroids end in the fixed alcove
//   inversion-agreement   placement and sorted-state inversions coincide
//   sp-roundtrip          forward after invert returns the word
std::vector<std::string> suite_names();

// Throws invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, int m, int n,
                      std::uint64_t seed = 1, long long budget = 0);

}  // namespace rpf
