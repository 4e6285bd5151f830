#pragma once

#include <cstdint>
#include <optional>

#include "illusion/colored_graph.hpp"
#include "illusion/core.hpp"
#include "illusion/problem.hpp"

namespace illusion {

struct SearchBudget {
  std::int64_t max_cost = 13;
  std::int64_t max_candidates = 26;
  std::optional<std::int64_t> time_cap_ms;

  // 13 / 26, with max_candidates (and optionally max_cost) overridden by the
  // ILLUSION_GUARD_OVERRIDE environment variable, format "CANDIDATES[,COST]".
  static SearchBudget defaults();
};

enum class OracleStatus { Found, NoneWithinBudget, TooLarge };

struct OracleResult {
  OracleStatus status = OracleStatus::NoneWithinBudget;
  std::optional<EditSolution> solution;  // Found
  std::int64_t pool_size = 0;
};

// Exhaustive minimum-cost edit search. Candidate pool: all non-edges for
// additions, all edges for removals, sorted lexicographically. For t = 0, 1,
// ... max_cost it enumerates t-subsets in lexicographic order and returns the
// first whose application is illusion-free at variant.p(). Depends only on
// apply_edits and illusion_report. The time cap, when hit, reports TooLarge.
OracleResult brute_force_min_edits(const ColoredGraph& g, const ProblemVariant& variant,
                                   const SearchBudget& budget);

// True iff brute_force_min_edits finds a solution of cost <= k. Throws
// TooLarge when the pool exceeds the guard.
bool brute_force_is_illusion_free_reachable(const ColoredGraph& g, const ProblemVariant& variant,
                                            RationalP p, std::int64_t k,
                                            SearchBudget budget = SearchBudget::defaults());

}  // namespace illusion
