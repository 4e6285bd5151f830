#include "illusion/hardness.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "illusion/errors.hpp"
#include "illusion/problem.hpp"

namespace illusion {

void XsatInstance::validate() const {
  if (n_vars < 1 || l < 1) throw InvalidParameters("XSAT needs n_vars >= 1 and l >= 1");
  if (static_cast<int>(clauses.size()) != n_vars) {
    throw InvalidParameters("XSAT needs as many clauses as variables (" +
                            std::to_string(clauses.size()) + " vs " + std::to_string(n_vars) + ")");
  }
  if (n_vars % l != 0) {
    throw InvalidParameters("l = " + std::to_string(l) + " does not divide n = " +
                            std::to_string(n_vars) + "; no exact cover can exist");
  }
  std::vector<int> occurrences(n_vars + 1, 0);
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& clause = clauses[c];
    const std::string where = "clause " + std::to_string(c + 1);
    if (static_cast<int>(clause.size()) != l) {
      throw InvalidParameters(where + " has " + std::to_string(clause.size()) + " literals, not " +
                              std::to_string(l));
    }
    std::vector<int> sorted = clause;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidParameters(where + " repeats a variable");
    }
    for (int x : clause) {
      if (x < 1 || x > n_vars) throw InvalidParameters(where + " names variable out of range");
      ++occurrences[x];
    }
  }
  for (int x = 1; x <= n_vars; ++x) {
    if (occurrences[x] != l) {
      throw InvalidParameters("variable " + std::to_string(x) + " occurs " +
                              std::to_string(occurrences[x]) + " times, not " + std::to_string(l));
    }
  }
}

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t s = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > s) out.push_back(line.substr(s, i - s));
  }
  return out;
}

int to_int(std::string_view s, std::size_t line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

XsatInstance parse_xsat(std::string_view text) {
  XsatInstance inst;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const auto t = tokens_of(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (t.empty() || t[0] == "c") {
      if (end == text.size()) break;
      continue;
    }
    if (t[0] == "p") {
      if (header) throw ParseError(line_no, "duplicate header");
      if (t.size() != 4 || t[1] != "xsat") throw ParseError(line_no, "expected 'p xsat <n> <l>'");
      inst.n_vars = to_int(t[2], line_no);
      inst.l = to_int(t[3], line_no);
      header = true;
    } else {
      if (!header) throw ParseError(line_no, "clause before header");
      if (to_int(t.back(), line_no) != 0) throw ParseError(line_no, "clause must end with 0");
      std::vector<int> clause;
      for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const int x = to_int(t[i], line_no);
        if (x <= 0) throw ParseError(line_no, "literals must be positive variable numbers");
        clause.push_back(x);
      }
      inst.clauses.push_back(std::move(clause));
    }
    if (end == text.size()) break;
  }
  if (!header) throw ParseError(line_no, "missing 'p xsat' header");
  inst.validate();
  return inst;
}

std::string serialize_xsat(const XsatInstance& inst) {
  std::ostringstream out;
  out << "p xsat " << inst.n_vars << ' ' << inst.l << '\n';
  for (const auto& c : inst.clauses) {
    for (int x : c) out << x << ' ';
    out << "0\n";
  }
  return out.str();
}

bool is_xsat_solution(const XsatInstance& inst, const Assignment& asg) {
  for (int x : asg) {
    if (x < 1 || x > inst.n_vars) {
      throw InvalidAssignment("variable " + std::to_string(x) + " is out of range 1.." +
                              std::to_string(inst.n_vars));
    }
  }
  for (const auto& clause : inst.clauses) {
    int hits = 0;
    for (int x : clause) hits += asg.count(x) ? 1 : 0;
    if (hits != 1) return false;
  }
  return true;
}

std::string_view variant_name(ReductionVariant v) {
  switch (v) {
    case ReductionVariant::PILow: return "pi-low";
    case ReductionVariant::PIRHigh: return "pir-high";
    case ReductionVariant::PIAHigh: return "pia-high";
    case ReductionVariant::PIRLow: return "pir-low";
  }
  return "?";
}

ReductionVariant parse_reduction_variant(std::string_view name) {
  for (auto v : {ReductionVariant::PILow, ReductionVariant::PIRHigh, ReductionVariant::PIAHigh,
                 ReductionVariant::PIRLow}) {
    if (variant_name(v) == name) return v;
  }
  throw InvalidParameters("unknown reduction variant '" + std::string(name) + "'");
}

namespace {

bool low_p(ReductionVariant v) {
  return v == ReductionVariant::PILow || v == ReductionVariant::PIRLow;
}

RationalP threshold(ReductionVariant v, std::int64_t a, std::int64_t l) {
  return low_p(v) ? RationalP(a, a + l) : RationalP(l, a + l);
}

bool removal_variant(ReductionVariant v) {
  return v == ReductionVariant::PIRHigh || v == ReductionVariant::PIRLow;
}

// Colour of variable and clause nodes per construction.
Color variable_color(ReductionVariant v) { return removal_variant(v) ? Color::Red : Color::Blue; }
Color clause_color(ReductionVariant v) {
  switch (v) {
    case ReductionVariant::PILow:
    case ReductionVariant::PIRLow: return Color::Red;
    default: return Color::Blue;
  }
}

Color kind_color(ReductionVariant v, RoleKind k) {
  switch (k) {
    case RoleKind::Variable: return variable_color(v);
    case RoleKind::Clause: return clause_color(v);
    case RoleKind::DummyBlue:
    case RoleKind::EqualizingBlue:
    case RoleKind::ExtraBlue: return Color::Blue;
    default: return Color::Red;
  }
}

void check_parameters(ReductionVariant v, const XsatInstance& inst, std::int64_t a,
                      std::int64_t l) {
  inst.validate();
  auto fail = [&](const std::string& cond) {
    throw InvalidParameters(std::string(variant_name(v)) + " requires " + cond);
  };
  const std::int64_t n = inst.n_vars;
  if (l < 3) fail("l >= 3");
  if (!(a >= 1 && a < l)) fail("l > a >= 1");
  if (std::gcd(a, l) != 1) fail("gcd(a, l) = 1");
  if (n % l != 0) fail("l | n");
  if (inst.l != l) fail("the formula's clause size to equal l");
  if ((v == ReductionVariant::PILow || v == ReductionVariant::PIAHigh) && n < 2 * l) {
    fail("n >= 2l");
  }
}

std::string padded(std::int64_t value, std::int64_t max_value) {
  const std::string digits = std::to_string(value);
  const std::size_t width = std::to_string(std::max<std::int64_t>(max_value, 1)).size();
  return std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

class Builder {
 public:
  using Group = std::vector<NodeIndex>;

  explicit Builder(ReductionOutput& out) : out_(out) {}

  Group add(RoleKind kind, std::int64_t count, const std::string& prefix, int clause = 0) {
    Group g;
    const Color c = kind_color(out_.variant, kind);
    const std::int64_t n = out_.source.n_vars;
    for (std::int64_t i = 1; i <= count; ++i) {
      std::string id = prefix;
      if (kind == RoleKind::Variable || kind == RoleKind::Clause) {
        id += padded(i, n);
      } else if (clause > 0) {
        id += padded(clause, n) + "_" + padded(i, count);
      } else {
        id += padded(i, count);
      }
      g.push_back(out_.graph.add_node(id, c));
      Role r{kind, clause, 0};
      if (kind == RoleKind::Variable) r.variable = static_cast<int>(i);
      if (kind == RoleKind::Clause) r.clause = static_cast<int>(i);
      out_.roles.push_back(r);
    }
    return g;
  }

  void join(const Group& x, const Group& y) {
    for (NodeIndex a : x) {
      for (NodeIndex b : y) {
        if (a != b) out_.graph.connect(a, b);
      }
    }
  }
  void join(NodeIndex a, const Group& y) { join(Group{a}, y); }
  void clique(const Group& x) { join(x, x); }
  void link(NodeIndex a, NodeIndex b) { out_.graph.connect(a, b); }

 private:
  ReductionOutput& out_;
};

ReductionOutput start(ReductionVariant v, const XsatInstance& inst, std::int64_t a,
                      std::int64_t l) {
  check_parameters(v, inst, a, l);
  ReductionOutput out;
  out.variant = v;
  out.source = inst;
  out.a = a;
  out.l = l;
  out.p = threshold(v, a, l);
  out.budget = inst.n_vars * (l + a) / l;
  return out;
}

std::string_view kind_name(RoleKind k) {
  switch (k) {
    case RoleKind::Variable: return "variable";
    case RoleKind::Clause: return "clause";
    case RoleKind::DummyBlue: return "dummy blue";
    case RoleKind::DummyRed: return "dummy red";
    case RoleKind::EqualizingBlue: return "equalizing blue";
    case RoleKind::EqualizingRed: return "equalizing red";
    case RoleKind::ExtraBlue: return "extra blue";
    case RoleKind::ExtraRed: return "extra red";
  }
  return "?";
}

bool contains(const std::vector<int>& clause, int x) {
  return std::find(clause.begin(), clause.end(), x) != clause.end();
}

std::int64_t count_of(const std::vector<RoleCount>& table, RoleKind k) {
  for (const auto& rc : table) {
    if (rc.kind == k) return rc.count;
  }
  return 0;
}

}  // namespace

std::vector<RoleCount> expected_cardinalities(ReductionVariant v, std::int64_t n, std::int64_t a,
                                              std::int64_t l) {
  const Color vc = variable_color(v);
  const Color cc = clause_color(v);
  switch (v) {
    case ReductionVariant::PILow:
      return {{RoleKind::Variable, vc, n},
              {RoleKind::Clause, cc, n},
              {RoleKind::DummyBlue, Color::Blue, a * n * n + l - (2 * a * n + 2)},
              {RoleKind::DummyRed, Color::Red, l * n * n - 2 * l * n + (n - l)},
              {RoleKind::EqualizingBlue, Color::Blue, 2 * a * n - (n - 1)},
              {RoleKind::EqualizingRed, Color::Red, 2 * l * n - (n - l)}};
    case ReductionVariant::PIRHigh:
      return {{RoleKind::Variable, vc, n},
              {RoleKind::Clause, cc, n},
              {RoleKind::DummyBlue, Color::Blue, l * n - (n - 1), true},
              {RoleKind::DummyRed, Color::Red, a * n - (l - 1), true},
              {RoleKind::EqualizingBlue, Color::Blue, l - 1},
              {RoleKind::EqualizingRed, Color::Red, a},
              {RoleKind::ExtraBlue, Color::Blue, n * n * n * n}};
    case ReductionVariant::PIAHigh:
      return {{RoleKind::Variable, vc, n},
              {RoleKind::Clause, cc, n},
              {RoleKind::DummyBlue, Color::Blue, l * n * n - (l - 1) * n},
              {RoleKind::DummyRed, Color::Red, a * n * n - a * (n - 2) + n / l},
              {RoleKind::EqualizingRed, Color::Red, a},
              {RoleKind::EqualizingBlue, Color::Blue, l - 1},
              {RoleKind::ExtraRed, Color::Red, a * (n - 2)},
              {RoleKind::ExtraBlue, Color::Blue, (l - 2) * n - (l - 1)}};
    case ReductionVariant::PIRLow:
      return {{RoleKind::Variable, vc, n},
              {RoleKind::Clause, cc, n},
              {RoleKind::DummyBlue, Color::Blue, a},
              {RoleKind::DummyRed, Color::Red, 1},
              {RoleKind::EqualizingRed, Color::Red, l},
              {RoleKind::EqualizingBlue, Color::Blue, a},
              {RoleKind::ExtraRed, Color::Red, n / l},
              {RoleKind::ExtraBlue, Color::Blue, n}};
  }
  return {};
}

ReductionOutput reduce_xsat_pi_low(const XsatInstance& inst, std::int64_t a, std::int64_t l) {
  auto out = start(ReductionVariant::PILow, inst, a, l);
  const auto sizes = expected_cardinalities(out.variant, inst.n_vars, a, l);
  Builder b(out);
  const auto vars = b.add(RoleKind::Variable, inst.n_vars, "x");
  const auto clauses = b.add(RoleKind::Clause, inst.n_vars, "c");
  const auto bd = b.add(RoleKind::DummyBlue, count_of(sizes, RoleKind::DummyBlue), "bd");
  const auto rd = b.add(RoleKind::DummyRed, count_of(sizes, RoleKind::DummyRed), "rd");
  const auto be = b.add(RoleKind::EqualizingBlue, count_of(sizes, RoleKind::EqualizingBlue), "be");
  const auto re = b.add(RoleKind::EqualizingRed, count_of(sizes, RoleKind::EqualizingRed), "re");

  b.join(vars, be);
  b.join(vars, re);
  b.clique(vars);
  for (int x = 1; x <= inst.n_vars; ++x) {
    for (int c = 1; c <= inst.n_vars; ++c) {
      if (!contains(inst.clauses[c - 1], x)) b.link(vars[x - 1], clauses[c - 1]);
    }
  }
  b.join(clauses, be);
  b.join(clauses, re);
  b.join(clauses, bd);
  b.join(clauses, rd);
  b.join(bd, be);
  b.clique(bd);
  b.join(rd, be);
  b.clique(be);
  return out;
}

ReductionOutput reduce_xsat_pir_high(const XsatInstance& inst, std::int64_t a, std::int64_t l) {
  auto out = start(ReductionVariant::PIRHigh, inst, a, l);
  const auto sizes = expected_cardinalities(out.variant, inst.n_vars, a, l);
  Builder b(out);
  const auto vars = b.add(RoleKind::Variable, inst.n_vars, "x");
  const auto clauses = b.add(RoleKind::Clause, inst.n_vars, "c");
  std::vector<Builder::Group> bd(inst.n_vars);
  std::vector<Builder::Group> rd(inst.n_vars);
  Builder::Group all_rd;
  for (int c = 1; c <= inst.n_vars; ++c) {
    bd[c - 1] = b.add(RoleKind::DummyBlue, count_of(sizes, RoleKind::DummyBlue), "bd", c);
    rd[c - 1] = b.add(RoleKind::DummyRed, count_of(sizes, RoleKind::DummyRed), "rd", c);
    all_rd.insert(all_rd.end(), rd[c - 1].begin(), rd[c - 1].end());
  }
  const auto be = b.add(RoleKind::EqualizingBlue, count_of(sizes, RoleKind::EqualizingBlue), "be");
  const auto re = b.add(RoleKind::EqualizingRed, count_of(sizes, RoleKind::EqualizingRed), "re");
  const auto extra = b.add(RoleKind::ExtraBlue, count_of(sizes, RoleKind::ExtraBlue), "bp");

  b.join(vars, re);
  for (int c = 1; c <= inst.n_vars; ++c) {
    for (int x : inst.clauses[c - 1]) b.link(vars[x - 1], clauses[c - 1]);
    b.join(clauses[c - 1], bd[c - 1]);
    b.join(clauses[c - 1], rd[c - 1]);
    b.join(bd[c - 1], extra);
  }
  b.clique(clauses);
  b.join(all_rd, be);
  b.join(all_rd, re);
  b.join(be, extra);
  b.join(re, extra);
  b.clique(extra);
  return out;
}

ReductionOutput reduce_xsat_pia_high(const XsatInstance& inst, std::int64_t a, std::int64_t l) {
  auto out = start(ReductionVariant::PIAHigh, inst, a, l);
  const auto sizes = expected_cardinalities(out.variant, inst.n_vars, a, l);
  Builder b(out);
  const auto vars = b.add(RoleKind::Variable, inst.n_vars, "x");
  const auto clauses = b.add(RoleKind::Clause, inst.n_vars, "c");
  const auto bd = b.add(RoleKind::DummyBlue, count_of(sizes, RoleKind::DummyBlue), "bd");
  const auto rd = b.add(RoleKind::DummyRed, count_of(sizes, RoleKind::DummyRed), "rd");
  const auto re = b.add(RoleKind::EqualizingRed, count_of(sizes, RoleKind::EqualizingRed), "re");
  const auto be = b.add(RoleKind::EqualizingBlue, count_of(sizes, RoleKind::EqualizingBlue), "be");
  const auto rp = b.add(RoleKind::ExtraRed, count_of(sizes, RoleKind::ExtraRed), "rp");
  const auto bp = b.add(RoleKind::ExtraBlue, count_of(sizes, RoleKind::ExtraBlue), "bp");

  b.join(vars, bp);
  b.join(vars, rp);
  b.clique(vars);
  for (int x = 1; x <= inst.n_vars; ++x) {
    for (int c = 1; c <= inst.n_vars; ++c) {
      if (!contains(inst.clauses[c - 1], x)) b.link(vars[x - 1], clauses[c - 1]);
    }
  }
  for (const auto* g : {&bp, &rp, &re, &be}) b.join(clauses, *g);
  b.clique(clauses);
  for (const auto* g : {&re, &be, &rp, &bp}) b.join(bd, *g);
  b.clique(bd);
  b.join(rd, re);
  b.join(rd, bp);
  b.join(be, bp);
  b.join(re, rp);
  b.join(re, bp);
  b.join(re, be);
  b.clique(bp);
  b.join(rp, be);
  return out;
}

ReductionOutput reduce_xsat_pir_low(const XsatInstance& inst, std::int64_t a, std::int64_t l) {
  auto out = start(ReductionVariant::PIRLow, inst, a, l);
  const auto sizes = expected_cardinalities(out.variant, inst.n_vars, a, l);
  Builder b(out);
  const auto vars = b.add(RoleKind::Variable, inst.n_vars, "x");
  const auto clauses = b.add(RoleKind::Clause, inst.n_vars, "c");
  const auto bd = b.add(RoleKind::DummyBlue, count_of(sizes, RoleKind::DummyBlue), "bd");
  const auto rd = b.add(RoleKind::DummyRed, count_of(sizes, RoleKind::DummyRed), "rd");
  const auto re = b.add(RoleKind::EqualizingRed, count_of(sizes, RoleKind::EqualizingRed), "re");
  const auto be = b.add(RoleKind::EqualizingBlue, count_of(sizes, RoleKind::EqualizingBlue), "be");
  const auto rp = b.add(RoleKind::ExtraRed, count_of(sizes, RoleKind::ExtraRed), "rp");
  const auto bp = b.add(RoleKind::ExtraBlue, count_of(sizes, RoleKind::ExtraBlue), "bp");

  b.join(vars, be);
  for (int c = 1; c <= inst.n_vars; ++c) {
    for (int x : inst.clauses[c - 1]) b.link(vars[x - 1], clauses[c - 1]);
  }
  b.join(clauses, bd);
  b.join(clauses, rd);
  b.join(bd, bp);
  b.join(rd, bp);
  b.join(be, rp);
  b.join(be, bp);
  b.join(re, rp);
  b.join(re, bp);
  b.clique(bp);
  return out;
}

ReductionOutput reduce_xsat(ReductionVariant v, const XsatInstance& inst, std::int64_t a,
                            std::int64_t l) {
  switch (v) {
    case ReductionVariant::PILow: return reduce_xsat_pi_low(inst, a, l);
    case ReductionVariant::PIRHigh: return reduce_xsat_pir_high(inst, a, l);
    case ReductionVariant::PIAHigh: return reduce_xsat_pia_high(inst, a, l);
    case ReductionVariant::PIRLow: return reduce_xsat_pir_low(inst, a, l);
  }
  throw InvalidParameters("unknown reduction variant");
}

std::string ReductionOutput::role_label(NodeIndex v) const {
  const Role& r = roles.at(v);
  const char c = color_letter(graph.color(v));
  switch (r.kind) {
    case RoleKind::Variable: return std::string(1, c) + "_V";
    case RoleKind::Clause: return std::string(1, c) + "_C";
    case RoleKind::DummyBlue:
    case RoleKind::DummyRed:
      return std::string(1, c) + "_D" + (r.clause > 0 ? "^C(" + std::to_string(r.clause) + ")" : "");
    case RoleKind::EqualizingBlue:
    case RoleKind::EqualizingRed: return std::string(1, c) + "_E";
    case RoleKind::ExtraBlue:
    case RoleKind::ExtraRed: return std::string(1, c) + "'";
  }
  return "?";
}

namespace {

struct RoleIndex {
  std::map<int, NodeIndex> variable;
  std::map<int, NodeIndex> clause;
  std::map<RoleKind, std::vector<NodeIndex>> members;
};

RoleIndex index_roles(const ReductionOutput& red) {
  RoleIndex idx;
  for (NodeIndex v = 0; v < red.roles.size(); ++v) {
    const auto& r = red.roles[v];
    if (r.kind == RoleKind::Variable) idx.variable[r.variable] = v;
    if (r.kind == RoleKind::Clause) idx.clause[r.clause] = v;
    idx.members[r.kind].push_back(v);
  }
  return idx;
}

}  // namespace

EditSolution witness_to_edits(const ReductionOutput& red, const Assignment& asg) {
  if (!is_xsat_solution(red.source, asg)) {
    throw InvalidAssignment("assignment is not an exact cover of the clauses");
  }
  const auto idx = index_roles(red);
  const auto& g = red.graph;
  EditSolution s;
  auto edge = [&](NodeIndex a, NodeIndex b) { return g.edge(a, b); };
  auto members = [&](RoleKind k) {
    auto it = idx.members.find(k);
    return it == idx.members.end() ? std::vector<NodeIndex>{} : it->second;
  };
  std::size_t next_dummy = 0;
  const auto dummies = members(RoleKind::DummyBlue);
  const auto eq_red = members(RoleKind::EqualizingRed);
  for (int x : asg) {
    const NodeIndex vx = idx.variable.at(x);
    for (int c = 1; c <= red.source.n_vars; ++c) {
      if (!contains(red.source.clauses[c - 1], x)) continue;
      const NodeIndex wc = idx.clause.at(c);
      (removal_variant(red.variant) ? s.removed : s.added).insert(edge(vx, wc));
    }
    switch (red.variant) {
      case ReductionVariant::PILow:
        for (std::int64_t i = 0; i < red.a; ++i) {
          if (next_dummy >= dummies.size()) {
            throw WitnessMappingIncomplete("ran out of dummy blue nodes");
          }
          s.added.insert(edge(vx, dummies[next_dummy++]));
        }
        break;
      case ReductionVariant::PIRHigh:
        for (NodeIndex r : eq_red) s.removed.insert(edge(vx, r));
        break;
      case ReductionVariant::PIAHigh:
        for (NodeIndex r : eq_red) s.added.insert(edge(vx, r));
        break;
      case ReductionVariant::PIRLow:
        break;
    }
  }
  const auto variant = removal_variant(red.variant) ? ProblemVariant::pir(red.p)
                                                    : ProblemVariant::pia(red.p);
  const auto report = validate_solution(g, s, variant);
  if (!report.valid()) {
    std::string why;
    for (std::size_t i = 0; i < report.messages.size() && i < 3; ++i) {
      why += (i ? "; " : "") + report.messages[i];
    }
    throw WitnessMappingIncomplete(std::string(variant_name(red.variant)) +
                                   " witness mapping does not validate: " + why);
  }
  return s;
}

bool StructureReport::ok() const {
  return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.passed; });
}

std::vector<std::string> StructureReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : claims) {
    if (!c.passed) out.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
  }
  return out;
}

StructureReport validate_reduction_structure(const ReductionOutput& red) {
  StructureReport rep;
  const auto& g = red.graph;
  const std::int64_t n = red.source.n_vars;
  const std::int64_t a = red.a;
  const std::int64_t l = red.l;
  const RationalP p = red.p;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.claims.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail)});
  };

  if (red.roles.size() != g.node_count()) {
    add("one role per node", false,
        std::to_string(red.roles.size()) + " roles for " + std::to_string(g.node_count()) + " nodes");
    return rep;
  }

  const auto table = expected_cardinalities(red.variant, n, a, l);
  std::int64_t expected_total = 0;
  for (const auto& rc : table) {
    const std::string label = std::string(kind_name(rc.kind)) + " per-clause class size = " +
                              std::to_string(rc.count);
    if (rc.per_clause) {
      expected_total += rc.count * n;
      std::string bad;
      for (int c = 1; c <= n && bad.empty(); ++c) {
        const auto have = std::count_if(red.roles.begin(), red.roles.end(), [&](const Role& r) {
          return r.kind == rc.kind && r.clause == c;
        });
        if (have != rc.count) bad = "clause " + std::to_string(c) + " has " + std::to_string(have);
      }
      add(label, bad.empty(), bad);
      continue;
    }
    expected_total += rc.count;
    const auto have = std::count_if(red.roles.begin(), red.roles.end(),
                                    [&](const Role& r) { return r.kind == rc.kind; });
    add(std::string(kind_name(rc.kind)) + " class size = " + std::to_string(rc.count),
        have == rc.count, "found " + std::to_string(have));
  }
  add("node count = " + std::to_string(expected_total),
      static_cast<std::int64_t>(g.node_count()) == expected_total,
      "found " + std::to_string(g.node_count()));

  {
    std::string bad;
    for (NodeIndex v = 0; v < g.node_count() && bad.empty(); ++v) {
      if (g.color(v) != kind_color(red.variant, red.roles[v].kind)) bad = g.id(v);
    }
    add("node colours match roles", bad.empty(), bad);
  }
  add("p = " + threshold(red.variant, a, l).str(), p == threshold(red.variant, a, l), p.str());
  add("budget = n(l+a)/l = " + std::to_string(n * (l + a) / l), red.budget == n * (l + a) / l,
      std::to_string(red.budget));

  std::vector<NeighbourCounts> counts(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) counts[v] = neighbour_counts(g, v);

  auto for_kind = [&](const std::string& name, std::initializer_list<RoleKind> kinds,
                      const std::function<bool(const NeighbourCounts&)>& pred) {
    std::string bad;
    for (NodeIndex v = 0; v < g.node_count() && bad.empty(); ++v) {
      const auto k = red.roles[v].kind;
      if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) continue;
      if (!pred(counts[v])) {
        bad = g.id(v) + " has b=" + std::to_string(counts[v].blue) +
              " r=" + std::to_string(counts[v].red);
      }
    }
    add(name, bad.empty(), bad);
  };
  auto illusion_free = [&](const NeighbourCounts& c) { return !is_under_illusion(c, p); };

  switch (red.variant) {
    case ReductionVariant::PILow:
      for_kind("variable nodes: l*b = a*r", {RoleKind::Variable},
               [&](const auto& c) { return l * c.blue == a * c.red; });
      for_kind("clause nodes: l*b = a*r - l", {RoleKind::Clause},
               [&](const auto& c) { return l * c.blue == a * c.red - l; });
      for_kind("clause nodes need exactly one blue addition", {RoleKind::Clause},
               [&](const auto& c) { return deficit_add(c, p) == 1; });
      for_kind("dummy blue nodes: b = an^2+l-n-2, r = n", {RoleKind::DummyBlue},
               [&](const auto& c) { return c.blue == a * n * n + l - n - 2 && c.red == n; });
      for_kind("dummy red nodes: b = 2an-n+1, r = n", {RoleKind::DummyRed},
               [&](const auto& c) { return c.blue == 2 * a * n - n + 1 && c.red == n; });
      for_kind("equalizing blue nodes: b = an^2+l-2, r = ln^2+2n-2ln-l", {RoleKind::EqualizingBlue},
               [&](const auto& c) {
                 return c.blue == a * n * n + l - 2 && c.red == l * n * n + 2 * n - 2 * l * n - l;
               });
      for_kind("every node outside the clause class is illusion-free",
               {RoleKind::Variable, RoleKind::DummyBlue, RoleKind::DummyRed,
                RoleKind::EqualizingBlue, RoleKind::EqualizingRed},
               illusion_free);
      break;
    case ReductionVariant::PIRHigh:
      for_kind("variable nodes: l*r = a*b", {RoleKind::Variable},
               [&](const auto& c) { return l * c.red == a * c.blue; });
      for_kind("clause nodes: l*r = a*b + l", {RoleKind::Clause},
               [&](const auto& c) { return l * c.red == a * c.blue + l; });
      for_kind("clause nodes need exactly one red removal", {RoleKind::Clause},
               [&](const auto& c) { return deficit_remove(c, p) == 1; });
      for_kind("per-clause dummy red nodes: l*r = a*b", {RoleKind::DummyRed},
               [&](const auto& c) { return l * c.red == a * c.blue; });
      for_kind("dummy blue, equalizing and extra nodes are illusion-free",
               {RoleKind::DummyBlue, RoleKind::EqualizingBlue, RoleKind::EqualizingRed,
                RoleKind::ExtraBlue},
               illusion_free);
      break;
    case ReductionVariant::PIAHigh:
      for_kind("variable nodes: b = l(n-2), r = a(n-2)", {RoleKind::Variable},
               [&](const auto& c) { return c.blue == l * (n - 2) && c.red == a * (n - 2); });
      for_kind("clause nodes: b = l(n-1)-1, r = a(n-1)", {RoleKind::Clause},
               [&](const auto& c) { return c.blue == l * (n - 1) - 1 && c.red == a * (n - 1); });
      for_kind("dummy, equalizing blue and extra nodes are illusion-free",
               {RoleKind::DummyBlue, RoleKind::DummyRed, RoleKind::EqualizingBlue,
                RoleKind::ExtraBlue, RoleKind::ExtraRed},
               illusion_free);
      for_kind("equalizing red nodes need n/l blue additions", {RoleKind::EqualizingRed},
               [&](const auto& c) { return deficit_add(c, p) == n / l; });
      break;
    case ReductionVariant::PIRLow:
      for_kind("variable nodes: b = a, r = l", {RoleKind::Variable},
               [&](const auto& c) { return c.blue == a && c.red == l; });
      for_kind("clause nodes: b = a, r = l+1", {RoleKind::Clause},
               [&](const auto& c) { return c.blue == a && c.red == l + 1; });
      for_kind("extra red nodes: b = a, r = l", {RoleKind::ExtraRed},
               [&](const auto& c) { return c.blue == a && c.red == l; });
      for_kind("dummy, equalizing red and extra blue nodes are illusion-free",
               {RoleKind::DummyBlue, RoleKind::DummyRed, RoleKind::EqualizingRed,
                RoleKind::ExtraBlue},
               illusion_free);
      for_kind("equalizing blue nodes need n/l red removals", {RoleKind::EqualizingBlue},
               [&](const auto& c) { return deficit_remove(c, p) == n / l; });
      break;
  }
  return rep;
}

}  // namespace illusion
