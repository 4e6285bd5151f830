#include "illusion/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "illusion/errors.hpp"
#include "illusion/generate.hpp"
#include "illusion/hardness.hpp"
#include "illusion/io.hpp"
#include "illusion/oracle.hpp"
#include "illusion/solvers.hpp"

namespace illusion::cli {

namespace {

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    write_text_file(*path, text);
  } else {
    out << text;
  }
}

std::string document(const ProblemVariant& v, const EditSolution& s) {
  return serialize_solution(SolutionDocument{v, s});
}

struct SolveArgs {
  std::string problem;
  std::string input;
  std::optional<std::int64_t> budget;
  std::optional<std::string> output;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const auto variant = ProblemVariant::parse(a.problem);
  if (!variant.p().is_half()) {
    throw InvalidParameters("solve only handles the p = 1/2 problems; use oracle for " +
                            a.problem);
  }
  const auto g = parse_graph(read_text_file(a.input));
  if (a.budget) {
    if (*a.budget < 0) throw InvalidParameters("--budget must be non-negative");
    const auto d = decide(g, variant, *a.budget);
    if (d.answer == Decision::Answer::Yes) {
      out << "YES\n";
      if (a.output) write_text_file(*a.output, document(variant, *d.witness));
      return kOk;
    }
    if (d.answer == Decision::Answer::No) {
      out << "NO\n";
      if (d.infeasible) {
        err << "no edit set removes every illusion\n";
        return kInfeasible;
      }
      if (d.optimum) err << "optimum cost " << *d.optimum << " exceeds budget " << *a.budget << '\n';
      return kNoOrInvalid;
    }
    err << "undecided within the search guard\n";
    return kSizeGuard;
  }
  const auto s = solve(g, variant);
  emit(out, a.output, document(variant, s));
  err << variant.name() << ": cost " << s.cost() << '\n';
  return kOk;
}

struct CheckArgs {
  std::string p = "1/2";
  std::string input;
  std::optional<std::string> solution;
};

void print_report(std::ostream& out, const IllusionReport& rep) {
  for (const auto& n : rep.nodes) {
    out << "node " << n.id << ' ' << color_letter(n.color) << " blue " << n.counts.blue << " red "
        << n.counts.red << (n.under_illusion ? " illusion" : " ok") << '\n';
  }
  out << "under-illusion " << rep.flagged().size() << " of " << rep.nodes.size() << '\n';
}

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const RationalP p = RationalP::parse(a.p);
  const auto g = parse_graph(read_text_file(a.input));
  if (!a.solution) {
    const auto rep = illusion_report(g, p);
    print_report(out, rep);
    out << (rep.illusion_free ? "illusion-free\n" : "not illusion-free\n");
    return rep.illusion_free ? kOk : kNoOrInvalid;
  }
  const auto doc = parse_solution(read_text_file(*a.solution));
  if (!(doc.p() == p)) {
    throw InvalidParameters("solution file has p " + doc.p().str() + " but --p is " + p.str());
  }
  const auto rep = validate_solution(g, doc.solution, doc.problem, p);
  for (const auto& m : rep.messages) out << m << '\n';
  if (rep.applicable) print_report(out, illusion_report(apply_edits(g, doc.solution), p));
  out << (rep.valid() ? "valid" : "invalid") << " cost " << doc.solution.cost() << '\n';
  return rep.valid() ? kOk : kNoOrInvalid;
}

struct OracleArgs {
  std::string problem;
  std::string p = "1/2";
  std::string input;
  std::optional<std::int64_t> max_cost;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  const auto variant = ProblemVariant::parse(a.problem, RationalP::parse(a.p));
  const auto g = parse_graph(read_text_file(a.input));
  auto budget = SearchBudget::defaults();
  if (a.max_cost) budget.max_cost = *a.max_cost;
  const auto r = brute_force_min_edits(g, variant, budget);
  switch (r.status) {
    case OracleStatus::Found:
      out << document(variant, *r.solution);
      return kOk;
    case OracleStatus::NoneWithinBudget:
      err << "no solution of cost <= " << budget.max_cost << " (pool " << r.pool_size << ")\n";
      return kNoOrInvalid;
    case OracleStatus::TooLarge:
      err << "candidate pool " << r.pool_size << " exceeds guard " << budget.max_candidates
          << "; set ILLUSION_GUARD_OVERRIDE to raise it\n";
      return kSizeGuard;
  }
  return kNoOrInvalid;
}

struct GenArgs {
  std::string model = "random";
  std::size_t nodes = 7;
  std::string edge_prob = "1/2";
  std::string blue_frac = "1/2";
  std::uint64_t seed = 0;
  bool strict_majority = false;
  std::optional<std::string> output;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream&) {
  const ColoredGraph g =
      a.model == "random"
          ? generate_random(a.nodes, RationalP::parse(a.edge_prob), RationalP::parse(a.blue_frac),
                            a.seed, a.strict_majority)
          : fixture_graph(a.model);
  emit(out, a.output, serialize_graph(g));
  return kOk;
}

struct ReduceArgs {
  std::string variant;
  std::int64_t a = 1;
  std::int64_t l = 3;
  std::string input;
  std::optional<std::string> witness;
  std::optional<std::string> output;
  std::optional<std::string> witness_output;
};

Assignment parse_assignment(const std::string& text) {
  Assignment asg;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int x = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      asg.insert(x);
    } catch (const std::logic_error&) {
      throw InvalidAssignment("bad variable '" + item + "' in --witness");
    }
  }
  return asg;
}

std::string annotated_graph(const ReductionOutput& red) {
  std::ostringstream text;
  text << "# " << variant_name(red.variant) << " n=" << red.source.n_vars << " a=" << red.a
       << " l=" << red.l << " p=" << red.p.str() << " budget=" << red.budget << '\n';
  for (NodeIndex v = 0; v < red.graph.node_count(); ++v) {
    text << "# role " << red.graph.id(v) << ' ' << red.role_label(v) << '\n';
  }
  text << serialize_graph(red.graph);
  return text.str();
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  const auto inst = parse_xsat(read_text_file(a.input));
  const auto red = reduce_xsat(parse_reduction_variant(a.variant), inst, a.a, a.l);
  emit(out, a.output, annotated_graph(red));

  const auto rep = validate_reduction_structure(red);
  err << variant_name(red.variant) << ": " << red.graph.node_count() << " nodes, "
      << red.graph.edge_count() << " edges, p " << red.p.str() << ", budget " << red.budget << '\n';
  for (const auto& f : rep.failures()) err << "claim failed: " << f << '\n';

  if (!a.witness) return kOk;
  const auto asg = parse_assignment(*a.witness);
  if (!is_xsat_solution(inst, asg)) {
    err << "assignment is not an exact cover\n";
    return kNoOrInvalid;
  }
  const auto s = witness_to_edits(red, asg);
  const auto variant = s.removed.empty() ? ProblemVariant::pia(red.p) : ProblemVariant::pir(red.p);
  err << "witness cost " << s.cost() << " (budget " << red.budget << ")\n";
  if (a.witness_output) write_text_file(*a.witness_output, document(variant, s));
  return static_cast<std::int64_t>(s.cost()) <= red.budget ? kOk : kNoOrInvalid;
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const InfeasibleInstance& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const WitnessMappingIncomplete& e) {
    err << "error: " << e.what() << '\n';
    return kNoOrInvalid;
  } catch (const InvalidAssignment& e) {
    err << "error: " << e.what() << '\n';
    return kNoOrInvalid;
  } catch (const std::exception& e) {
    // parse errors, unknown nodes, bad parameters, unmet preconditions, I/O
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact majority-illusion elimination on two-coloured graphs", "illusion"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Minimum edit set for a p = 1/2 problem");
  solve_cmd->add_option("--problem", solve_args.problem, "miae|mire|mie|half-ia|half-ir|half-i")
      ->required();
  solve_cmd->add_option("--input", solve_args.input, "graph file")->required();
  solve_cmd->add_option("--budget", solve_args.budget, "print YES/NO for cost <= K");
  solve_cmd->add_option("--output", solve_args.output, "solution file (default stdout)");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Report illusions, or validate a solution");
  check_cmd->add_option("--p", check_args.p, "threshold A/B");
  check_cmd->add_option("--input", check_args.input, "graph file")->required();
  check_cmd->add_option("--solution", check_args.solution, "solution file");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimum edit search");
  oracle_cmd->add_option("--problem", oracle_args.problem, "any problem name")->required();
  oracle_cmd->add_option("--p", oracle_args.p, "threshold A/B for the p-* problems");
  oracle_cmd->add_option("--input", oracle_args.input, "graph file")->required();
  oracle_cmd->add_option("--max-cost", oracle_args.max_cost, "largest cost searched");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Write a random or bundled graph");
  gen_cmd->add_option("--model", gen_args.model, "random|fig2a|fig3a|fig4")
      ->check(CLI::IsMember({"random", "fig2a", "fig3a", "fig4"}));
  gen_cmd->add_option("--nodes", gen_args.nodes, "node count");
  gen_cmd->add_option("--edge-prob", gen_args.edge_prob, "edge probability NUM/DEN");
  gen_cmd->add_option("--blue-frac", gen_args.blue_frac, "blue fraction NUM/DEN");
  gen_cmd->add_option("--seed", gen_args.seed, "RNG seed");
  gen_cmd->add_flag("--strict-majority", gen_args.strict_majority, "force a blue majority");
  gen_cmd->add_option("--output", gen_args.output, "graph file (default stdout)");

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce-xsat", "Build a hardness instance from XSAT");
  reduce_cmd->add_option("--variant", reduce_args.variant, "pi-low|pir-high|pia-high|pir-low")
      ->required();
  reduce_cmd->add_option("--a", reduce_args.a, "numerator parameter")->required();
  reduce_cmd->add_option("--l", reduce_args.l, "clause size")->required();
  reduce_cmd->add_option("--input", reduce_args.input, "XSAT file")->required();
  reduce_cmd->add_option("--witness", reduce_args.witness, "TRUE variables, e.g. 1,5");
  reduce_cmd->add_option("--output", reduce_args.output, "graph file (default stdout)");
  reduce_cmd->add_option("--witness-output", reduce_args.witness_output, "witness solution file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (*solve_cmd) return guarded([&] { return cmd_solve(solve_args, out, err); }, err);
  if (*check_cmd) return guarded([&] { return cmd_check(check_args, out); }, err);
  if (*oracle_cmd) return guarded([&] { return cmd_oracle(oracle_args, out, err); }, err);
  if (*gen_cmd) return guarded([&] { return cmd_gen(gen_args, out, err); }, err);
  return guarded([&] { return cmd_reduce(reduce_args, out, err); }, err);
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace illusion::cli
