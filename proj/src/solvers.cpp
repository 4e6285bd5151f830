#include "illusion/solvers.hpp"

#include "illusion/bmatching.hpp"
#include "illusion/errors.hpp"
#include "illusion/oracle.hpp"
#include "illusion/reduction.hpp"

namespace illusion {

namespace {

void require_majority(const ColoredGraph& g, const char* what) {
  if (g.blue_count() <= g.red_count()) {
    throw PreconditionViolated(std::string(what) + " requires a strict blue majority (|B| = " +
                               std::to_string(g.blue_count()) + ", |R| = " +
                               std::to_string(g.red_count()) + ")");
  }
}

EditSolution run(const BMatchingInstance& inst) {
  return edits_from_assignment(inst, solve_b_matching(inst));
}

ColoredGraph without_red_red(const ColoredGraph& g) {
  ColoredGraph out = g;
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    if (g.is_blue(i)) continue;
    for (NodeIndex j : g.neighbours(i)) {
      if (i < j && !g.is_blue(j)) out.disconnect(i, j);
    }
  }
  return out;
}

ColoredGraph with_blue_clique(const ColoredGraph& g) {
  ColoredGraph out = g;
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    if (!g.is_blue(i)) continue;
    for (NodeIndex j = i + 1; j < g.node_count(); ++j) {
      if (g.is_blue(j)) out.connect(i, j);
    }
  }
  return out;
}

}  // namespace

EditSolution solve_miae(const ColoredGraph& g) {
  require_majority(g, "MIAE");
  return run(build_miae_instance(g));
}

EditSolution solve_mire(const ColoredGraph& g) {
  require_majority(g, "MIRE");
  return run(build_mire_instance(g));
}

EditSolution solve_mie(const ColoredGraph& g) {
  require_majority(g, "MIE");
  EditSolution s;
  s.added = solve_miae(without_red_red(g)).added;
  s.removed = solve_mire(with_blue_clique(g)).removed;
  return s;
}

EditSolution solve_half_ia(const ColoredGraph& g) {
  const auto blues = static_cast<std::int64_t>(g.blue_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (g.is_blue(v) && neighbour_counts(g, v).red >= blues) {
      throw Infeasible("blue node '" + g.id(v) + "' has at least |B| red neighbours");
    }
  }
  return run(build_miae_instance(g));
}

EditSolution solve_half_ir(const ColoredGraph& g) { return run(build_mire_instance(g)); }

// Blue nodes with r(v) >= |B| (call them B') cannot be fixed by additions.
// An optimal edit set joins B' to every other blue node, removes exactly
// r(v) - |B| + 1 cross edges at each B' node, removes red-red edges only,
// and adds blue-blue edges only among the remaining blues. The additions and
// the removals are then two independent b-matching problems on the graph
// with B' joined to B.
EditSolution solve_half_i(const ColoredGraph& g) {
  const std::size_t n = g.node_count();
  const auto blues = static_cast<std::int64_t>(g.blue_count());
  std::vector<bool> stuck(n, false);
  for (NodeIndex v = 0; v < n; ++v) {
    stuck[v] = g.is_blue(v) && neighbour_counts(g, v).red >= blues;
  }

  EditSolution s;
  ColoredGraph g1 = g;
  for (NodeIndex v = 0; v < n; ++v) {
    if (!stuck[v]) continue;
    for (NodeIndex w = 0; w < n; ++w) {
      if (w != v && g.is_blue(w) && g1.connect(v, w)) s.added.insert(g.edge(v, w));
    }
  }

  std::vector<std::pair<NodeIndex, NodeIndex>> add_aux;
  std::vector<std::int64_t> add_bound(n, 0);
  std::vector<ConstraintKind> add_kind(n, ConstraintKind::Equality);
  std::vector<std::pair<NodeIndex, NodeIndex>> rem_aux;
  std::vector<std::int64_t> rem_bound(n, 0);
  std::vector<ConstraintKind> rem_kind(n, ConstraintKind::Equality);
  std::vector<std::int64_t> blue_aux(n, 0);
  std::vector<std::int64_t> red_aux(n, 0);
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = i + 1; j < n; ++j) {
      const bool bi = g.is_blue(i);
      const bool bj = g.is_blue(j);
      if (bi && bj && !stuck[i] && !stuck[j] && !g1.has_edge(i, j)) {
        add_aux.emplace_back(i, j);
        ++blue_aux[i];
        ++blue_aux[j];
      }
      if (!g1.has_edge(i, j)) continue;
      if (!bi && !bj) {
        rem_aux.emplace_back(i, j);
        ++red_aux[i];
        ++red_aux[j];
      } else if (bi != bj && (stuck[i] || stuck[j])) {
        rem_aux.emplace_back(i, j);
      }
    }
  }
  for (NodeIndex v = 0; v < n; ++v) {
    const auto c = neighbour_counts(g1, v);
    if (g.is_blue(v) && !stuck[v]) {
      add_kind[v] = ConstraintKind::AtMost;
      add_bound[v] = blue_aux[v] + c.blue - c.red;
    }
    if (stuck[v]) rem_bound[v] = c.red - c.blue;
    if (!g.is_blue(v)) {
      rem_kind[v] = ConstraintKind::AtMost;
      rem_bound[v] = red_aux[v] + c.blue - c.red;
    }
  }
  const BMatchingInstance additions(g1, InstanceVariant::Addition, std::move(add_aux),
                                    std::move(add_bound), std::move(add_kind));
  const BMatchingInstance removals(g1, InstanceVariant::Removal, std::move(rem_aux),
                                   std::move(rem_bound), std::move(rem_kind));
  const auto a = run(additions);
  const auto r = run(removals);
  s.added.insert(a.added.begin(), a.added.end());
  s.removed = r.removed;
  return s;
}

EditSolution solve(const ColoredGraph& g, const ProblemVariant& variant) {
  switch (variant.kind()) {
    case ProblemKind::MIAE: return solve_miae(g);
    case ProblemKind::MIRE: return solve_mire(g);
    case ProblemKind::MIE: return solve_mie(g);
    case ProblemKind::HalfIA: return solve_half_ia(g);
    case ProblemKind::HalfIR: return solve_half_ir(g);
    case ProblemKind::HalfI: return solve_half_i(g);
    default:
      throw InvalidParameters("no exact polynomial solver for " + variant.name() +
                              "; use the oracle");
  }
}

namespace {

ProblemVariant half_counterpart(const ProblemVariant& v) {
  switch (v.kind()) {
    case ProblemKind::PIA: return ProblemVariant::half_ia();
    case ProblemKind::PIR: return ProblemVariant::half_ir();
    case ProblemKind::PI: return ProblemVariant::half_i();
    default: return v;
  }
}

}  // namespace

Decision decide(const ColoredGraph& g, const ProblemVariant& variant, std::int64_t k) {
  if (k < 0) throw InvalidParameters("budget must be non-negative");
  Decision d;
  if (variant.p().is_half()) {
    try {
      auto s = solve(g, half_counterpart(variant));
      const auto cost = static_cast<std::int64_t>(s.cost());
      if (cost <= k) {
        d.answer = Decision::Answer::Yes;
        d.witness = std::move(s);
      } else {
        d.answer = Decision::Answer::No;
        d.optimum = cost;
      }
    } catch (const Infeasible&) {
      d.answer = Decision::Answer::No;
      d.infeasible = true;
    }
    return d;
  }
  SearchBudget budget = SearchBudget::defaults();
  budget.max_cost = k;
  const auto out = brute_force_min_edits(g, variant, budget);
  switch (out.status) {
    case OracleStatus::Found:
      d.answer = Decision::Answer::Yes;
      d.witness = out.solution;
      break;
    case OracleStatus::NoneWithinBudget:
      d.answer = Decision::Answer::No;
      break;
    case OracleStatus::TooLarge:
      d.answer = Decision::Answer::Undecided;
      break;
  }
  return d;
}

}  // namespace illusion
