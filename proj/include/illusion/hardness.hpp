#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "illusion/colored_graph.hpp"
#include "illusion/core.hpp"
#include "illusion/rational_p.hpp"

namespace illusion {

// Exact-one satisfiability over positive clauses of size l in which every
// variable occurs exactly l times. Variables are numbered 1..n_vars.
struct XsatInstance {
  int n_vars = 0;
  int l = 0;
  std::vector<std::vector<int>> clauses;

  // Throws InvalidParameters on a violated invariant, including l not
  // dividing n_vars.
  void validate() const;
};

// "p xsat <n_vars> <l>" header, then one clause per line terminated by 0.
// Lines starting with 'c' are comments. Throws ParseError / InvalidParameters.
XsatInstance parse_xsat(std::string_view text);
std::string serialize_xsat(const XsatInstance& inst);

using Assignment = std::set<int>;  // TRUE variables

// Throws InvalidAssignment for an index outside 1..n_vars.
bool is_xsat_solution(const XsatInstance& inst, const Assignment& asg);

enum class ReductionVariant { PILow, PIRHigh, PIAHigh, PIRLow };

std::string_view variant_name(ReductionVariant v);  // pi-low, pir-high, ...
ReductionVariant parse_reduction_variant(std::string_view name);

enum class RoleKind {
  Variable,
  Clause,
  DummyBlue,
  DummyRed,
  EqualizingBlue,
  EqualizingRed,
  ExtraBlue,
  ExtraRed,
};

struct Role {
  RoleKind kind;
  int clause = 0;    // per-clause dummies and clause nodes
  int variable = 0;  // variable nodes
};

struct ReductionOutput {
  ReductionVariant variant;
  XsatInstance source;
  std::int64_t a = 0;
  std::int64_t l = 0;
  ColoredGraph graph;
  std::vector<Role> roles;  // aligned with graph node indices
  RationalP p;
  std::int64_t budget = 0;

  // Class label such as "B_V", "R_C", "B_D^C(3)".
  std::string role_label(NodeIndex v) const;
};

struct RoleCount {
  RoleKind kind;
  Color color;
  std::int64_t count;  // per clause for the per-clause dummy classes
  bool per_clause = false;
};

// Closed-form class sizes for the construction.
std::vector<RoleCount> expected_cardinalities(ReductionVariant v, std::int64_t n, std::int64_t a,
                                              std::int64_t l);

// Preconditions: l >= 3, l > a >= 1, gcd(a, l) = 1, l | n, inst.l = l, and
// n >= 2l for PILow and PIAHigh. Throws InvalidParameters.
ReductionOutput reduce_xsat_pi_low(const XsatInstance& inst, std::int64_t a, std::int64_t l);
ReductionOutput reduce_xsat_pir_high(const XsatInstance& inst, std::int64_t a, std::int64_t l);
ReductionOutput reduce_xsat_pia_high(const XsatInstance& inst, std::int64_t a, std::int64_t l);
ReductionOutput reduce_xsat_pir_low(const XsatInstance& inst, std::int64_t a, std::int64_t l);
ReductionOutput reduce_xsat(ReductionVariant v, const XsatInstance& inst, std::int64_t a,
                            std::int64_t l);

// Edit set certifying a YES instance. Throws InvalidAssignment when asg is not
// an exact cover, WitnessMappingIncomplete when the mapped edits fail
// validation under the variant's edit discipline.
EditSolution witness_to_edits(const ReductionOutput& red, const Assignment& asg);

struct StructureClaim {
  std::string name;
  bool passed;
  std::string detail;  // first counterexample when failed
};

struct StructureReport {
  std::vector<StructureClaim> claims;

  bool ok() const;
  std::vector<std::string> failures() const;
};

StructureReport validate_reduction_structure(const ReductionOutput& red);

}  // namespace illusion
