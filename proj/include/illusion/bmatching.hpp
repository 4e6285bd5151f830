#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "illusion/reduction.hpp"
#include "illusion/weighted_matching.hpp"

namespace illusion {

// Where a gadget edge comes from.
struct GadgetOrigin {
  enum class Kind {
    Skip,   // internal pair (e_u, e_v) of an aux edge: encodes x_e = 0
    Use,    // port to vertex copy: encodes x_e = 1 at that endpoint
    Slack,  // absorbs unused capacity of an AtMost node
  };
  Kind kind;
  std::size_t aux_edge;  // meaningful for Skip and Use
};

// Vertex-expansion gadget. Copies of node v: min(b'(v), aux degree) for
// AtMost, b'(v) for Equality. Each aux edge has two ports joined by a Skip
// edge of weight -sign; ports connect to every copy of their endpoint.
// AtMost nodes with at least one copy get a clique on their copies and a
// helper vertex joined to each copy; helpers form a clique, plus one global
// dummy vertex when parity requires it.
struct GadgetGraph {
  std::size_t node_count = 0;
  std::vector<WeightedEdge> edges;
  std::vector<GadgetOrigin> provenance;  // parallel to edges
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ports;  // per aux edge (u side, v side)
  std::vector<std::vector<std::uint32_t>> copies;              // per instance node
  std::vector<std::optional<std::uint32_t>> helper;            // per instance node
  std::optional<std::uint32_t> dummy;
  // Instance objective = offset + matching weight.
  std::int64_t offset = 0;
};

struct MatchingResult {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // a < b, sorted
  std::int64_t total_weight = 0;
};

GadgetGraph build_gadget(const BMatchingInstance& inst);

// Maximum-weight perfect matching, or nullopt when none exists (including an
// odd node count).
std::optional<MatchingResult> max_weight_perfect_matching(std::size_t node_count,
                                                          const std::vector<WeightedEdge>& edges);
std::optional<MatchingResult> max_weight_perfect_matching(const GadgetGraph& g);

// x_e = 0 iff the two ports of e are matched to each other.
FractionalAssignment decode_matching(const BMatchingInstance& inst, const GadgetGraph& g,
                                     const MatchingResult& m);

// Builds a perfect matching of the gadget that decodes to x. Throws
// InvalidParameters if x is not integral or violates a degree constraint.
MatchingResult extend_to_perfect_matching(const BMatchingInstance& inst, const GadgetGraph& g,
                                          const FractionalAssignment& x);

// Optimal integral assignment. Throws Infeasible when no assignment meets the
// Equality rows.
FractionalAssignment solve_b_matching(const BMatchingInstance& inst);

inline constexpr std::size_t kBruteForceAuxLimit = 25;

// Exhaustive search over {0,1} assignments with degree pruning. Among optima
// the first in enumeration order wins (edges in index order, 1 before 0).
// Throws TooLarge above max_aux_edges, Infeasible when nothing is feasible.
FractionalAssignment brute_force_b_matching(const BMatchingInstance& inst,
                                            std::size_t max_aux_edges = kBruteForceAuxLimit);

}  // namespace illusion
