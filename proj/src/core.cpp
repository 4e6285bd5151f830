#include "illusion/core.hpp"

#include "illusion/errors.hpp"

namespace illusion {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

NeighbourCounts neighbour_counts(const ColoredGraph& g, NodeIndex v) {
  NeighbourCounts c;
  for (NodeIndex w : g.neighbours(v)) {
    if (g.is_blue(w)) {
      ++c.blue;
    } else {
      ++c.red;
    }
  }
  return c;
}

NeighbourCounts neighbour_counts(const ColoredGraph& g, const NodeId& v) {
  return neighbour_counts(g, g.index_of(v));
}

bool is_under_illusion(NeighbourCounts c, RationalP p) {
  return c.blue * p.den() < p.num() * c.degree();
}

bool is_under_illusion(const ColoredGraph& g, const NodeId& v, RationalP p) {
  return is_under_illusion(neighbour_counts(g, v), p);
}

std::vector<NodeId> IllusionReport::flagged() const {
  std::vector<NodeId> out;
  for (const auto& n : nodes) {
    if (n.under_illusion) out.push_back(n.id);
  }
  return out;
}

IllusionReport illusion_report(const ColoredGraph& g, RationalP p) {
  IllusionReport rep;
  rep.nodes.reserve(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    const auto c = neighbour_counts(g, v);
    const bool flag = is_under_illusion(c, p);
    rep.nodes.push_back(NodeReport{g.id(v), g.color(v), c, flag});
    if (flag) rep.illusion_free = false;
  }
  return rep;
}

std::int64_t deficit_add(NeighbourCounts c, RationalP p) {
  const std::int64_t rhs = p.num() * c.degree() - p.den() * c.blue;
  if (rhs <= 0) return 0;
  if (p.num() == p.den()) {
    throw Infeasible("p = 1 cannot be reached by additions while red neighbours remain");
  }
  return ceil_div(rhs, p.den() - p.num());
}

std::int64_t surplus_add(NeighbourCounts c, RationalP p) {
  const std::int64_t rhs = p.den() * c.blue - p.num() * c.degree();
  if (rhs < 0) return 0;
  if (p.num() == 0) return kUnboundedSurplus;
  return rhs / p.num();
}

std::int64_t deficit_remove(NeighbourCounts c, RationalP p) {
  const std::int64_t rhs = p.num() * c.degree() - p.den() * c.blue;
  if (rhs <= 0) return 0;
  // rhs <= num * red because den >= num, so the cap at red never binds.
  return std::min(ceil_div(rhs, p.num()), c.red);
}

std::int64_t surplus_remove(NeighbourCounts c, RationalP p) {
  const std::int64_t rhs = p.den() * c.blue - p.num() * c.degree();
  if (rhs < 0) return 0;
  if (p.num() == p.den()) return c.blue;
  return std::min(rhs / (p.den() - p.num()), c.blue);
}

std::int64_t deficit_add(const ColoredGraph& g, const NodeId& v, RationalP p) {
  return deficit_add(neighbour_counts(g, v), p);
}
std::int64_t surplus_add(const ColoredGraph& g, const NodeId& v, RationalP p) {
  return surplus_add(neighbour_counts(g, v), p);
}
std::int64_t deficit_remove(const ColoredGraph& g, const NodeId& v, RationalP p) {
  return deficit_remove(neighbour_counts(g, v), p);
}
std::int64_t surplus_remove(const ColoredGraph& g, const NodeId& v, RationalP p) {
  return surplus_remove(neighbour_counts(g, v), p);
}

ColoredGraph apply_edits(const ColoredGraph& g, const EditSolution& s) {
  ColoredGraph out = g;
  auto endpoints = [&](const Edge& e) {
    auto a = g.find(e.u);
    auto b = g.find(e.v);
    if (!a || !b) throw InvalidEdit(e.u, e.v, "unknown endpoint");
    if (*a == *b) throw InvalidEdit(e.u, e.v, "self-loop");
    return std::pair{*a, *b};
  };
  for (const auto& e : s.removed) {
    if (s.added.count(e) != 0) throw InvalidEdit(e.u, e.v, "edge both added and removed");
    auto [a, b] = endpoints(e);
    if (!out.disconnect(a, b)) throw InvalidEdit(e.u, e.v, "removed edge is not present");
  }
  for (const auto& e : s.added) {
    auto [a, b] = endpoints(e);
    if (g.has_edge(a, b)) throw InvalidEdit(e.u, e.v, "added edge is already present");
    out.connect(a, b);
  }
  return out;
}

ValidationReport validate_solution(const ColoredGraph& g, const EditSolution& s,
                                   const ProblemVariant& variant, RationalP p) {
  ValidationReport rep;
  const auto d = variant.discipline();
  if (d == EditDiscipline::AddOnly && !s.removed.empty()) {
    rep.discipline_ok = false;
    rep.messages.push_back(variant.name() + " allows additions only");
  }
  if (d == EditDiscipline::RemoveOnly && !s.added.empty()) {
    rep.discipline_ok = false;
    rep.messages.push_back(variant.name() + " allows removals only");
  }
  try {
    const auto after = apply_edits(g, s);
    const auto report = illusion_report(after, p);
    rep.illusion_free = report.illusion_free;
    for (const auto& id : report.flagged()) {
      rep.messages.push_back("node " + id + " is under illusion after editing");
    }
  } catch (const InvalidEdit& e) {
    rep.applicable = false;
    rep.illusion_free = false;
    rep.messages.push_back(e.what());
  }
  return rep;
}

ValidationReport validate_solution(const ColoredGraph& g, const EditSolution& s,
                                   const ProblemVariant& variant) {
  return validate_solution(g, s, variant, variant.p());
}

}  // namespace illusion
