#pragma once

#include <cstdint>
#include <vector>

#include "spreadlab/bitset.hpp"

namespace spreadlab {

// Exact minimum hitting set by branch and bound. The spread computations ask
// two kinds of question: the exact optimum (spread values) and a budgeted
// decision (witness checks). Families coming from NonGen constructions are
// conjugation-invariant, so the root branch may be restricted to class
// representatives supplied by the caller.
struct HSInstance {
  std::uint32_t universe = 0;
  std::vector<Bitset> sets;
};

struct HSOptions {
  double timeout_s = 600.0;
  // optional: branch candidates at depth 0 (symmetry-reduced); empty = all
  std::vector<std::uint32_t> root_candidates;
  bool lex_min_solution = true;
};

enum class HSStatus { Exact, Infeasible, Timeout };

struct HSResult {
  HSStatus status = HSStatus::Exact;
  std::uint32_t optimum = 0;                // when Exact
  std::vector<std::uint32_t> solution;      // optimal hitting set, ascending
  std::uint32_t lower_bound = 0;            // when Timeout
  std::uint32_t upper_bound = 0;
};

// exact optimum; Infeasible means no hitting set exists (an empty member set)
HSResult solve_min_hitting_set(const HSInstance& inst, const HSOptions& opts);

// does a hitting set of size <= k exist? If yes, `solution` holds one.
// status Timeout means undecided within the deadline.
HSResult hitting_set_leq(const HSInstance& inst, std::uint32_t k, const HSOptions& opts);

// removes duplicates and supersets; an empty set stays (infeasibility marker)
std::vector<Bitset> minimize_family(const std::vector<Bitset>& sets);

}  // namespace spreadlab
