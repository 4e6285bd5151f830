#pragma once

#include <string>
#include <string_view>

#include "illusion/colored_graph.hpp"
#include "illusion/core.hpp"
#include "illusion/problem.hpp"
#include "illusion/rational_p.hpp"

namespace illusion {

// Graph text format, one record per line:
//   # comment
//   v <id> <B|R>
//   e <id> <id>
// Throws ParseError (with line number) or UnknownNode.
ColoredGraph parse_graph(std::string_view text);
// Canonical form: nodes in graph order, then edges sorted.
std::string serialize_graph(const ColoredGraph& g);

struct SolutionDocument {
  ProblemVariant problem = ProblemVariant::miae();
  EditSolution solution;

  RationalP p() const { return problem.p(); }
};

// Solution text format:
//   problem <name>
//   p <A>/<B>
//   cost <n>
//   added <id> <id>      (zero or more)
//   removed <id> <id>    (zero or more)
SolutionDocument parse_solution(std::string_view text);
std::string serialize_solution(const SolutionDocument& doc);

// Throws std::runtime_error when the file cannot be read or written.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace illusion
