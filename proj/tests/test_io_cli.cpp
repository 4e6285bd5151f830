#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "illusion/cli.hpp"
#include "illusion/errors.hpp"
#include "illusion/generate.hpp"
#include "illusion/io.hpp"
#include "suites.hpp"

using namespace illusion;
using illusion::testing::fixture_path;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "illusion");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("illusion_test_" + name)).string();
}

std::vector<std::string> edge_list(const ColoredGraph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges()) out.push_back(e.u + "-" + e.v);
  return out;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("checked-in fixtures equal the bundled ones") {
    for (const char* name : {"fig2a", "fig3a", "fig4"}) {
      CHECK(read_text_file(fixture_path(std::string(name) + ".graph")) == fixture_text(name));
    }
  }

  TEST_CASE("fixture contents") {
    const auto fig2 = fixture_graph("fig2a");
    CHECK(fig2.node_count() == 8);
    CHECK(edge_list(fig2) == std::vector<std::string>{"v1-v2", "v2-v4", "v2-v5", "v3-v4", "v3-v7",
                                                      "v4-v5", "v4-v7", "v5-v6", "v5-v8",
                                                      "v6-v8"});
    std::vector<NodeId> blue;
    for (NodeIndex v = 0; v < fig2.node_count(); ++v) {
      if (fig2.is_blue(v)) blue.push_back(fig2.id(v));
    }
    CHECK(blue == std::vector<NodeId>{"v1", "v3", "v6", "v7", "v8"});

    const auto fig3 = fixture_graph("fig3a");
    CHECK(fig3.node_count() == 9);
    CHECK(fig3.blue_count() == 5);
    CHECK(edge_list(fig3) == std::vector<std::string>{"v1-v2", "v1-v3", "v2-v3", "v2-v5",
                                                      "v2-v6", "v3-v5", "v3-v6", "v4-v5",
                                                      "v5-v6", "v5-v8", "v6-v7", "v6-v9"});
    const auto fig4 = fixture_graph("fig4");
    CHECK(edge_list(fig4) == std::vector<std::string>{"v1-v2", "v1-v3", "v1-v4"});
    CHECK(fig4.red_count() == 1);
    CHECK_THROWS_AS(fixture_graph("fig9"), InvalidParameters);
  }

  TEST_CASE("graph parse errors carry line numbers") {
    CHECK(parse_graph("").node_count() == 0);
    CHECK(parse_graph("# only a comment\n\n").node_count() == 0);
    CHECK_THROWS_AS(parse_graph("v v1 B\ne v1 v9\n"), UnknownNode);
    try {
      parse_graph("v a B\nv b R\nv a R\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_graph("v a G\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("v a B\ne a a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("v a B\nv b B\ne a b\ne b a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("x a B\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("v a\n"), ParseError);
  }

  TEST_CASE("serialize and parse round-trip") {
    for (int i = 0; i < 30; ++i) {
      const auto g = testing::majority_graph(i);
      const auto text = serialize_graph(g);
      CHECK(parse_graph(text) == g);
      CHECK(serialize_graph(parse_graph(text)) == text);
    }
    // canonicalization is idempotent
    const auto messy = "v b R\nv a B\n# x\ne b a\n";
    const auto once = serialize_graph(parse_graph(messy));
    CHECK(once == "v b R\nv a B\ne a b\n");
    CHECK(serialize_graph(parse_graph(once)) == once);
  }

  TEST_CASE("solution documents") {
    SolutionDocument doc{ProblemVariant::pi(RationalP(1, 3)), {}};
    doc.solution.added.insert(Edge::make("b", "a"));
    doc.solution.removed.insert(Edge::make("c", "d"));
    const auto text = serialize_solution(doc);
    CHECK(text == "problem p-i\np 1/3\ncost 2\nadded a b\nremoved c d\n");
    const auto back = parse_solution(text);
    CHECK(back.solution == doc.solution);
    CHECK(back.p() == RationalP(1, 3));
    CHECK_THROWS_AS(parse_solution("problem miae\np 1/2\ncost 3\nadded a b\n"), ParseError);
    CHECK_THROWS_AS(parse_solution("problem miae\ncost 0\n"), ParseError);
    CHECK_THROWS_AS(parse_solution("problem miae\np 1/2\ncost 2\nadded a b\nadded b a\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_solution("problem miae\np 1/3\ncost 0\n"), ParseError);
  }

  TEST_CASE("random generator") {
    CHECK(generate_random(0, RationalP(1, 2), RationalP(1, 2), 1).node_count() == 0);
    const auto a = generate_random(9, RationalP(1, 2), RationalP(1, 3), 77);
    CHECK(a == generate_random(9, RationalP(1, 2), RationalP(1, 3), 77));
    CHECK_FALSE(a == generate_random(9, RationalP(1, 2), RationalP(1, 3), 78));
    CHECK(a.blue_count() == 3);
    CHECK(generate_random(9, RationalP(1, 2), RationalP(1, 3), 77, true).blue_count() == 5);
    // round half up: 5 * 1/2 = 2.5 -> 3
    CHECK(generate_random(5, RationalP(0, 1), RationalP(1, 2), 3).blue_count() == 3);
    CHECK(generate_random(6, RationalP(0, 1), RationalP(1, 2), 3).edge_count() == 0);
    CHECK(generate_random(6, RationalP(1, 1), RationalP(1, 2), 3).edge_count() == 15);
    CHECK(generate_random(3, RationalP(1, 1), RationalP(1, 2), 3).id(2) == "v3");
  }
}

TEST_SUITE("cli") {
  TEST_CASE("solve") {
    const auto fig2 = fixture_path("fig2a.graph");
    auto r = invoke({"solve", "--problem", "miae", "--input", fig2});
    CHECK(r.code == cli::kOk);
    CHECK(parse_solution(r.out).solution.cost() == 2);
    r = invoke({"solve", "--problem", "miae", "--input", fig2, "--budget", "1"});
    CHECK(r.code == cli::kNoOrInvalid);
    CHECK(r.out == "NO\n");
    r = invoke({"solve", "--problem", "mie", "--input", fig2, "--budget", "2"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "YES\n");
    CHECK(invoke({"solve", "--problem", "p-ia", "--input", fig2}).code == cli::kInputError);
    CHECK(invoke({"solve", "--problem", "miae", "--input", "/nonexistent"}).code == cli::kInputError);
  }

  TEST_CASE("solve writes an output file that check accepts") {
    const auto graph = fixture_path("fig3a.graph");
    const auto sol = temp_path("fig3a.sol");
    CHECK(invoke({"solve", "--problem", "mie", "--input", graph, "--output", sol}).code == 0);
    const auto r = invoke({"check", "--p", "1/2", "--input", graph, "--solution", sol});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("valid cost 6") != std::string::npos);
    CHECK(invoke({"check", "--p", "1/3", "--input", graph, "--solution", sol}).code ==
          cli::kInputError);
    std::remove(sol.c_str());
  }

  TEST_CASE("check reports illusions") {
    const auto r = invoke({"check", "--p", "1/2", "--input", fixture_path("fig3a.graph")});
    CHECK(r.code == cli::kNoOrInvalid);
    CHECK(r.out.find("under-illusion 9 of 9") != std::string::npos);
    CHECK(invoke({"check", "--p", "0/1", "--input", fixture_path("fig4.graph")}).code == cli::kOk);
    CHECK(invoke({"check", "--p", "1/4", "--input", fixture_path("fig4.graph")}).code ==
          cli::kNoOrInvalid);
  }

  TEST_CASE("infeasible and size guard exit codes") {
    const auto path = temp_path("no.graph");
    write_text_file(path, "v b B\nv r1 R\nv r2 R\ne b r1\ne b r2\n");
    CHECK(invoke({"solve", "--problem", "half-ia", "--input", path}).code == cli::kInfeasible);
    CHECK(invoke({"solve", "--problem", "miae", "--input", path}).code == cli::kInputError);
    std::remove(path.c_str());
    CHECK(invoke({"oracle", "--problem", "mie", "--input", fixture_path("fig2a.graph")}).code ==
          cli::kSizeGuard);
    const auto r = invoke({"oracle", "--problem", "p-ia", "--p", "1/3", "--input",
                        fixture_path("fig4.graph")});
    CHECK(r.code == cli::kOk);
    CHECK(parse_solution(r.out).solution.cost() == 2);
    CHECK(invoke({"oracle", "--problem", "miae", "--input", fixture_path("fig2a.graph"),
               "--max-cost", "1"})
              .code == cli::kNoOrInvalid);
  }

  TEST_CASE("gen is byte-identical across runs") {
    const std::vector<std::string> args = {"gen", "--model", "random", "--nodes", "10",
                                           "--edge-prob", "1/3", "--blue-frac", "3/5", "--seed",
                                           "11"};
    const auto a = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == invoke(args).out);
    CHECK(parse_graph(a.out).blue_count() == 6);
    CHECK(invoke({"gen", "--model", "fig2a"}).out == serialize_graph(fixture_graph("fig2a")));
    CHECK(invoke({"gen", "--model", "fig7"}).code == cli::kInputError);
    CHECK(invoke({"gen", "--edge-prob", "0.5"}).code == cli::kInputError);
  }

  TEST_CASE("reduce-xsat") {
    const auto f = fixture_path("fig6.xsat");
    const auto wit = temp_path("fig6.sol");
    auto r = invoke({"reduce-xsat", "--variant", "pi-low", "--a", "1", "--l", "3", "--input", f,
                  "--witness", "1,5", "--witness-output", wit});
    CHECK(r.code == cli::kOk);
    const auto g = parse_graph(r.out);
    CHECK(g.node_count() == 152);
    const auto doc = parse_solution(read_text_file(wit));
    CHECK(doc.solution.cost() == 8);
    CHECK(doc.p() == RationalP(1, 4));
    std::remove(wit.c_str());
    r = invoke({"reduce-xsat", "--variant", "pia-high", "--a", "1", "--l", "3", "--input", f,
             "--witness", "1,5"});
    CHECK(r.code == cli::kNoOrInvalid);
    CHECK(r.err.find("claim failed") != std::string::npos);
    CHECK(invoke({"reduce-xsat", "--variant", "pi-low", "--a", "1", "--l", "3", "--input", f,
               "--witness", "1,2"})
              .code == cli::kNoOrInvalid);
    CHECK(invoke({"reduce-xsat", "--variant", "pi-low", "--a", "3", "--l", "3", "--input", f}).code ==
          cli::kInputError);
  }

  TEST_CASE("usage errors") {
    CHECK(invoke({}).code == cli::kInputError);
    CHECK(invoke({"solve", "--input", "x"}).code == cli::kInputError);
    CHECK(invoke({"--help"}).code == cli::kOk);
  }
}
