#include "illusion/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "illusion/errors.hpp"

namespace illusion {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Calls fn(line_number, tokens) for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const auto line = text.substr(pos, end - pos);
    ++line_no;
    const auto tokens = split_tokens(line);
    if (!tokens.empty() && tokens[0].front() != '#') fn(line_no, tokens);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

}  // namespace

ColoredGraph parse_graph(std::string_view text) {
  ColoredGraph g;
  for_each_record(text, [&](std::size_t line, const std::vector<std::string_view>& t) {
    if (t[0] == "v") {
      if (t.size() != 3) throw ParseError(line, "expected 'v <id> <B|R>'");
      Color c;
      if (t[2] == "B") {
        c = Color::Blue;
      } else if (t[2] == "R") {
        c = Color::Red;
      } else {
        throw ParseError(line, "colour must be B or R, got '" + std::string(t[2]) + "'");
      }
      const std::string id(t[1]);
      if (g.contains(id)) throw ParseError(line, "duplicate node '" + id + "'");
      g.add_node(id, c);
    } else if (t[0] == "e") {
      if (t.size() != 3) throw ParseError(line, "expected 'e <id> <id>'");
      const std::string a(t[1]);
      const std::string b(t[2]);
      auto ia = g.find(a);
      if (!ia) throw UnknownNode(line, a);
      auto ib = g.find(b);
      if (!ib) throw UnknownNode(line, b);
      if (*ia == *ib) throw ParseError(line, "self-loop on '" + a + "'");
      if (!g.connect(*ia, *ib)) throw ParseError(line, "duplicate edge {" + a + ", " + b + "}");
    } else {
      throw ParseError(line, "unknown record '" + std::string(t[0]) + "'");
    }
  });
  return g;
}

std::string serialize_graph(const ColoredGraph& g) {
  std::ostringstream out;
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    out << "v " << g.id(v) << ' ' << color_letter(g.color(v)) << '\n';
  }
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

SolutionDocument parse_solution(std::string_view text) {
  std::optional<std::string> problem;
  std::optional<RationalP> p;
  std::optional<std::int64_t> cost;
  EditSolution s;
  for_each_record(text, [&](std::size_t line, const std::vector<std::string_view>& t) {
    const auto key = t[0];
    if (key == "problem" || key == "p" || key == "cost") {
      if (t.size() != 2) throw ParseError(line, "expected '" + std::string(key) + " <value>'");
      if (key == "problem") {
        if (problem) throw ParseError(line, "duplicate 'problem'");
        problem = std::string(t[1]);
      } else if (key == "p") {
        if (p) throw ParseError(line, "duplicate 'p'");
        try {
          p = RationalP::parse(t[1]);
        } catch (const InvalidParameters& e) {
          throw ParseError(line, e.what());
        }
      } else {
        if (cost) throw ParseError(line, "duplicate 'cost'");
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(t[1].data(), t[1].data() + t[1].size(), v);
        if (ec != std::errc{} || ptr != t[1].data() + t[1].size() || v < 0) {
          throw ParseError(line, "cost must be a non-negative integer");
        }
        cost = v;
      }
    } else if (key == "added" || key == "removed") {
      if (t.size() != 3) throw ParseError(line, "expected '" + std::string(key) + " <id> <id>'");
      Edge e;
      try {
        e = Edge::make(std::string(t[1]), std::string(t[2]));
      } catch (const InvalidGraph& err) {
        throw ParseError(line, err.what());
      }
      auto& target = key == "added" ? s.added : s.removed;
      if (!target.insert(e).second) throw ParseError(line, "duplicate pair " + to_string(e));
    } else {
      throw ParseError(line, "unknown key '" + std::string(key) + "'");
    }
  });
  if (!problem) throw ParseError(0, "missing 'problem'");
  if (!p) throw ParseError(0, "missing 'p'");
  if (!cost) throw ParseError(0, "missing 'cost'");
  if (static_cast<std::size_t>(*cost) != s.cost()) {
    throw ParseError(0, "cost " + std::to_string(*cost) + " does not match " +
                            std::to_string(s.cost()) + " listed edits");
  }
  SolutionDocument doc;
  try {
    doc.problem = ProblemVariant::parse(*problem, *p);
  } catch (const InvalidParameters& e) {
    throw ParseError(0, e.what());
  }
  doc.solution = std::move(s);
  return doc;
}

std::string serialize_solution(const SolutionDocument& doc) {
  std::ostringstream out;
  out << "problem " << doc.problem.name() << '\n';
  out << "p " << doc.p().str() << '\n';
  out << "cost " << doc.solution.cost() << '\n';
  for (const auto& e : doc.solution.added) out << "added " << e.u << ' ' << e.v << '\n';
  for (const auto& e : doc.solution.removed) out << "removed " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace illusion
