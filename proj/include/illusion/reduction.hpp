#pragma once

#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "illusion/colored_graph.hpp"
#include "illusion/core.hpp"

namespace illusion {

using Rational = boost::rational<std::int64_t>;

enum class InstanceVariant { Addition, Removal };
enum class EdgeClass { CrossRB, MonoSameColor };
enum class ConstraintKind { Equality, AtMost };

struct AuxEdge {
  NodeIndex u;
  NodeIndex v;
  EdgeClass cls;
};

// One value per aux edge, indexed like BMatchingInstance::aux_edges().
using FractionalAssignment = std::vector<Rational>;

// Degree-bounded matching problem in x-space. The objective maximizes
// sum(x on same-colour aux edges) - sum(x on cross aux edges).
//
// Addition: aux edges are non-edges of the base graph; a cross edge with
// x = 1 is added, a blue-blue edge with x = 0 is added.
// Removal: aux edges are edges of the base graph; a cross edge with x = 1 is
// removed, a red-red edge with x = 0 is removed.
class BMatchingInstance {
 public:
  // Validates the aux edges against the variant (see above), sorts them
  // canonically and rejects duplicates. A negative bound throws
  // InfeasibleInstance naming the node.
  BMatchingInstance(ColoredGraph base, InstanceVariant variant,
                    std::vector<std::pair<NodeIndex, NodeIndex>> aux,
                    std::vector<std::int64_t> bound, std::vector<ConstraintKind> kind);

  const ColoredGraph& base() const { return base_; }
  InstanceVariant variant() const { return variant_; }
  std::size_t node_count() const { return base_.node_count(); }
  const std::vector<AuxEdge>& aux_edges() const { return aux_; }
  Edge edge(std::size_t k) const { return base_.edge(aux_[k].u, aux_[k].v); }
  std::optional<std::size_t> find_edge(NodeIndex a, NodeIndex b) const;
  const std::vector<std::size_t>& incident(NodeIndex v) const { return incident_[v]; }
  std::int64_t bound(NodeIndex v) const { return bound_[v]; }
  ConstraintKind kind(NodeIndex v) const { return kind_[v]; }

  static int objective_sign(EdgeClass c) { return c == EdgeClass::MonoSameColor ? 1 : -1; }
  int sign(std::size_t k) const { return objective_sign(aux_[k].cls); }

 private:
  ColoredGraph base_;
  InstanceVariant variant_;
  std::vector<AuxEdge> aux_;
  std::vector<std::int64_t> bound_;
  std::vector<ConstraintKind> kind_;
  std::vector<std::vector<std::size_t>> incident_;
};

// Availability graph: cross non-edges plus blue-blue non-edges. Red nodes
// get Equality max(r - b, 0); blue nodes AtMost |aux neighbours that are
// blue| + b - r. Throws InfeasibleInstance when a blue bound is negative.
BMatchingInstance build_miae_instance(const ColoredGraph& g);

// Removable graph: cross edges plus red-red edges. Blue nodes get Equality
// max(r - b, 0); red nodes AtMost |aux neighbours that are red| + b - r.
BMatchingInstance build_mire_instance(const ColoredGraph& g);

// Throws NotIntegral if some value is not 0 or 1.
EditSolution edits_from_assignment(const BMatchingInstance& inst, const FractionalAssignment& x);
// Inverse of edits_from_assignment. Throws InvalidEdit for an edit that the
// instance cannot express.
FractionalAssignment assignment_from_edits(const BMatchingInstance& inst, const EditSolution& s);

Rational objective_value(const BMatchingInstance& inst, const FractionalAssignment& x);

// Throws InvalidParameters on a size mismatch or a value outside [0, 1].
bool verify_degree_constraints(const BMatchingInstance& inst, const FractionalAssignment& x);

struct BlossomCheckMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t exhaustive_limit = 12;

  static BlossomCheckMode exhaustive(std::size_t limit = 12) {
    return {Kind::Exhaustive, 0, 0, limit};
  }
  static BlossomCheckMode sampled(std::uint64_t seed, std::size_t count) {
    return {Kind::Sampled, seed, count, 12};
  }
};

struct BlossomViolation {
  std::vector<NodeId> X;
  std::vector<Edge> F;
  Rational lhs;
  std::int64_t rhs;
};

struct VerifyReport {
  std::vector<BlossomViolation> violations;
  std::size_t sets_checked = 0;

  bool ok() const { return violations.empty(); }
};

// Checks sum_{E*(X)} x + sum_F x <= floor((sum_X b' + |F|) / 2) for node sets
// X and F subset of the aux edges leaving X. For each X and each size k the
// k largest boundary values form the tightest F, so checking those is exact
// over all F. At most one violation is reported per (X, |F|).
// Exhaustive mode throws TooLarge above exhaustive_limit nodes.
VerifyReport verify_blossom_constraints(const BMatchingInstance& inst, const FractionalAssignment& x,
                                        const BlossomCheckMode& mode);

}  // namespace illusion
