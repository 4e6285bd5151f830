#pragma once

#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "illusion/colored_graph.hpp"
#include "illusion/problem.hpp"
#include "illusion/rational_p.hpp"

namespace illusion {

struct NeighbourCounts {
  std::int64_t blue = 0;
  std::int64_t red = 0;
  std::int64_t degree() const { return blue + red; }
  friend bool operator==(const NeighbourCounts&, const NeighbourCounts&) = default;
};

NeighbourCounts neighbour_counts(const ColoredGraph& g, NodeIndex v);
NeighbourCounts neighbour_counts(const ColoredGraph& g, const NodeId& v);

// b * den < num * deg. Degree-0 nodes are never under illusion.
bool is_under_illusion(NeighbourCounts c, RationalP p);
bool is_under_illusion(const ColoredGraph& g, const NodeId& v, RationalP p);

struct NodeReport {
  NodeId id;
  Color color;
  NeighbourCounts counts;
  bool under_illusion;
};

struct IllusionReport {
  std::vector<NodeReport> nodes;  // graph node order
  bool illusion_free = true;

  std::vector<NodeId> flagged() const;
};

IllusionReport illusion_report(const ColoredGraph& g, RationalP p);

// Returned by surplus_add when p = 0: every number of red additions keeps
// the node at threshold.
inline constexpr std::int64_t kUnboundedSurplus = std::numeric_limits<std::int64_t>::max();

// Smallest a >= 0 with (b + a) / (deg + a) >= p. Throws Infeasible when
// p = 1 and r > 0.
std::int64_t deficit_add(NeighbourCounts c, RationalP p);
// Largest a >= 0 with b / (deg + a) >= p, or 0 if none.
std::int64_t surplus_add(NeighbourCounts c, RationalP p);
// Smallest red-removal count r with b / (deg - r) >= p, capped at r(v).
std::int64_t deficit_remove(NeighbourCounts c, RationalP p);
// Largest blue-removal count r with (b - r) / (deg - r) >= p, or 0.
std::int64_t surplus_remove(NeighbourCounts c, RationalP p);

std::int64_t deficit_add(const ColoredGraph& g, const NodeId& v, RationalP p);
std::int64_t surplus_add(const ColoredGraph& g, const NodeId& v, RationalP p);
std::int64_t deficit_remove(const ColoredGraph& g, const NodeId& v, RationalP p);
std::int64_t surplus_remove(const ColoredGraph& g, const NodeId& v, RationalP p);

struct EditSolution {
  std::set<Edge> added;
  std::set<Edge> removed;

  std::size_t cost() const { return added.size() + removed.size(); }
  friend bool operator==(const EditSolution&, const EditSolution&) = default;
};

// Pure. Throws InvalidEdit for an added edge already present, a removed edge
// that is absent, an edge in both sets, or an unknown endpoint.
ColoredGraph apply_edits(const ColoredGraph& g, const EditSolution& s);

struct ValidationReport {
  bool discipline_ok = true;
  bool applicable = true;
  bool illusion_free = false;
  std::vector<std::string> messages;

  bool valid() const { return discipline_ok && applicable && illusion_free; }
};

ValidationReport validate_solution(const ColoredGraph& g, const EditSolution& s,
                                   const ProblemVariant& variant, RationalP p);
// Uses variant.p().
ValidationReport validate_solution(const ColoredGraph& g, const EditSolution& s,
                                   const ProblemVariant& variant);

}  // namespace illusion
