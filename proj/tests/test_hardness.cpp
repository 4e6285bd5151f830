#include <doctest.h>

#include <algorithm>
#include <map>

#include "illusion/errors.hpp"
#include "illusion/hardness.hpp"
#include "illusion/io.hpp"
#include "illusion/problem.hpp"
#include "suites.hpp"

using namespace illusion;

namespace {

XsatInstance fig6() {
  return {6, 3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}}};
}

// Three copies of one clause: {x} is an exact cover for each single x.
XsatInstance triple() { return {3, 3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}}; }

std::vector<Assignment> exact_covers(const XsatInstance& f) {
  std::vector<Assignment> out;
  for (unsigned mask = 0; mask < (1u << f.n_vars); ++mask) {
    Assignment a;
    for (int x = 1; x <= f.n_vars; ++x) {
      if (mask & (1u << (x - 1))) a.insert(x);
    }
    if (is_xsat_solution(f, a)) out.push_back(a);
  }
  return out;
}

std::int64_t total(const std::vector<RoleCount>& table, std::int64_t n) {
  std::int64_t t = 0;
  for (const auto& rc : table) t += rc.per_clause ? rc.count * n : rc.count;
  return t;
}

std::vector<std::string> failed_names(const StructureReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.claims) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

}  // namespace

TEST_SUITE("hardness") {
  TEST_CASE("xsat parsing") {
    const auto text = read_text_file(testing::fixture_path("fig6.xsat"));
    const auto f = parse_xsat(text);
    CHECK(f.clauses == fig6().clauses);
    CHECK(parse_xsat(serialize_xsat(f)).clauses == f.clauses);
    CHECK_THROWS_AS(parse_xsat("1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_xsat("p xsat 3 3\n1 2 3\n1 2 3 0\n1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_xsat("p xsat 3 3\n1 2 x 0\n"), ParseError);
    // variable 3 occurs twice, variable 1 four times
    CHECK_THROWS_AS(parse_xsat("p xsat 3 3\n1 2 3 0\n1 2 3 0\n1 2 1 0\n"), InvalidParameters);
    // l does not divide n
    XsatInstance bad{4, 3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};
    CHECK_THROWS_AS(bad.validate(), InvalidParameters);
  }

  TEST_CASE("exact covers") {
    const auto f = fig6();
    CHECK(is_xsat_solution(f, {1, 5}));
    CHECK_FALSE(is_xsat_solution(f, {1}));
    CHECK_FALSE(is_xsat_solution(f, {1, 2, 5}));
    CHECK_THROWS_AS(is_xsat_solution(f, {9}), InvalidAssignment);
    CHECK(exact_covers(f).size() >= 1);
  }

  TEST_CASE("parameter preconditions") {
    const auto f = fig6();
    CHECK_THROWS_AS(reduce_xsat_pi_low(f, 3, 3), InvalidParameters);  // a < l
    CHECK_THROWS_AS(reduce_xsat_pi_low(f, 0, 3), InvalidParameters);
    CHECK_THROWS_AS(reduce_xsat_pi_low(f, 1, 4), InvalidParameters);  // inst.l mismatch
    CHECK_THROWS_AS(reduce_xsat_pi_low(triple(), 1, 3), InvalidParameters);  // n < 2l
    CHECK_NOTHROW(reduce_xsat_pir_low(triple(), 1, 3));
    CHECK(parse_reduction_variant("pir-high") == ReductionVariant::PIRHigh);
    CHECK_THROWS_AS(parse_reduction_variant("pi-high"), InvalidParameters);
  }

  TEST_CASE("pi-low on the six-clause formula") {
    const auto red = reduce_xsat_pi_low(fig6(), 1, 3);
    CHECK(red.p == RationalP(1, 4));
    CHECK(red.budget == 8);
    CHECK(static_cast<std::int64_t>(red.graph.node_count()) ==
          total(expected_cardinalities(red.variant, 6, 1, 3), 6));
    const auto rep = validate_reduction_structure(red);
    CHECK_MESSAGE(rep.ok(), rep.failures().front());
    for (const auto& asg : exact_covers(fig6())) {
      const auto s = witness_to_edits(red, asg);
      CHECK(static_cast<std::int64_t>(s.cost()) == red.budget);
      CHECK(s.removed.empty());
      CHECK(validate_solution(red.graph, s, ProblemVariant::pia(red.p)).valid());
    }
    CHECK_THROWS_AS(witness_to_edits(red, {1}), InvalidAssignment);
    // without the clause fixes nothing is illusion-free
    CHECK_FALSE(illusion_report(red.graph, red.p).illusion_free);
  }

  TEST_CASE("pi-low structure for a = 2, l = 3") {
    const auto red = reduce_xsat_pi_low(fig6(), 2, 3);
    CHECK(red.p == RationalP(2, 5));
    CHECK(red.budget == 10);
    const auto rep = validate_reduction_structure(red);
    CHECK_MESSAGE(rep.ok(), rep.failures().front());
    const auto s = witness_to_edits(red, {1, 5});
    CHECK(static_cast<std::int64_t>(s.cost()) == red.budget);
  }

  TEST_CASE("pir-high on a three-variable formula") {
    const auto red = reduce_xsat_pir_high(triple(), 1, 3);
    CHECK(red.p == RationalP(3, 4));
    const auto rep = validate_reduction_structure(red);
    CHECK_MESSAGE(rep.ok(), rep.failures().front());
    for (int x = 1; x <= 3; ++x) {
      const auto s = witness_to_edits(red, {x});
      CHECK(static_cast<std::int64_t>(s.cost()) == red.budget);
      CHECK(s.added.empty());
    }
  }

  TEST_CASE("pir-high cardinalities at n = 6") {
    const auto red = reduce_xsat_pir_high(fig6(), 1, 3);
    const auto table = expected_cardinalities(red.variant, 6, 1, 3);
    CHECK(static_cast<std::int64_t>(red.graph.node_count()) == total(table, 6));
    std::int64_t extra = 0;
    for (const auto& r : red.roles) extra += r.kind == RoleKind::ExtraBlue;
    CHECK(extra == 6 * 6 * 6 * 6);
    const auto rep = validate_reduction_structure(red);
    CHECK_MESSAGE(rep.ok(), rep.failures().front());
    const auto s = witness_to_edits(red, {1, 5});
    CHECK(static_cast<std::int64_t>(s.cost()) == red.budget);
  }

  TEST_CASE("pia-high: the equalizing-red claim does not hold") {
    const auto red = reduce_xsat_pia_high(fig6(), 1, 3);
    CHECK(red.p == RationalP(3, 4));
    const auto rep = validate_reduction_structure(red);
    CHECK(failed_names(rep) ==
          std::vector<std::string>{"equalizing red nodes need n/l blue additions"});
    CHECK_THROWS_AS(witness_to_edits(red, {1, 5}), WitnessMappingIncomplete);
  }

  TEST_CASE("pir-low: the equalizing-blue claim does not hold, witness is cheap") {
    const auto red = reduce_xsat_pir_low(fig6(), 1, 3);
    CHECK(red.p == RationalP(1, 4));
    const auto rep = validate_reduction_structure(red);
    CHECK(failed_names(rep) ==
          std::vector<std::string>{"equalizing blue nodes need n/l red removals"});
    const auto s = witness_to_edits(red, {1, 5});
    CHECK(s.cost() == 6);
    CHECK(validate_solution(red.graph, s, ProblemVariant::pir(red.p)).valid());
  }

  TEST_CASE("roles, labels and node order") {
    const auto red = reduce_xsat_pi_low(fig6(), 1, 3);
    REQUIRE(red.roles.size() == red.graph.node_count());
    CHECK(red.role_label(0) == "B_V");
    CHECK(red.roles[0].variable == 1);
    std::map<RoleKind, std::vector<NodeId>> ids;
    for (NodeIndex v = 0; v < red.graph.node_count(); ++v) {
      ids[red.roles[v].kind].push_back(red.graph.id(v));
    }
    for (const auto& [kind, list] : ids) CHECK(std::is_sorted(list.begin(), list.end()));
    const auto pir = reduce_xsat_pir_high(triple(), 1, 3);
    bool per_clause = false;
    for (NodeIndex v = 0; v < pir.graph.node_count(); ++v) {
      if (pir.roles[v].kind == RoleKind::DummyRed) {
        per_clause = true;
        CHECK(pir.role_label(v).rfind("R_D^C(", 0) == 0);
      }
    }
    CHECK(per_clause);
  }

  TEST_CASE("reductions are deterministic") {
    CHECK(reduce_xsat_pia_high(fig6(), 1, 3).graph == reduce_xsat_pia_high(fig6(), 1, 3).graph);
  }
}
