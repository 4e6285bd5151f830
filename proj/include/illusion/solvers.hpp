#pragma once

#include <cstdint>
#include <optional>

#include "illusion/colored_graph.hpp"
#include "illusion/core.hpp"
#include "illusion/problem.hpp"

namespace illusion {

// All MI* solvers throw PreconditionViolated unless blue is a strict majority.
EditSolution solve_miae(const ColoredGraph& g);
EditSolution solve_mire(const ColoredGraph& g);
// Union of MIAE on g without its red-red edges and MIRE on g with every
// blue-blue pair joined.
EditSolution solve_mie(const ColoredGraph& g);

// No majority assumption. half-IA throws Infeasible when some blue node has
// at least |B| red neighbours, or when the red deficits cannot be met.
EditSolution solve_half_ia(const ColoredGraph& g);
EditSolution solve_half_ir(const ColoredGraph& g);
EditSolution solve_half_i(const ColoredGraph& g);

// Dispatches MIAE .. HalfI to the solvers above. Throws InvalidParameters for
// the general-p variants, which have no polynomial solver.
EditSolution solve(const ColoredGraph& g, const ProblemVariant& variant);

struct Decision {
  enum class Answer { Yes, No, Undecided };
  Answer answer = Answer::Undecided;
  std::optional<EditSolution> witness;  // Yes
  std::optional<std::int64_t> optimum;  // No, when known
  bool infeasible = false;              // No because no solution exists
};

// Yes iff the optimum cost is at most k. General-p variants (p != 1/2) go to
// the brute-force oracle with max_cost = k; its size guard yields Undecided.
Decision decide(const ColoredGraph& g, const ProblemVariant& variant, std::int64_t k);

}  // namespace illusion
