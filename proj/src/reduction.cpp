#include "illusion/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "illusion/errors.hpp"

namespace illusion {

BMatchingInstance::BMatchingInstance(ColoredGraph base, InstanceVariant variant,
                                     std::vector<std::pair<NodeIndex, NodeIndex>> aux,
                                     std::vector<std::int64_t> bound,
                                     std::vector<ConstraintKind> kind)
    : base_(std::move(base)), variant_(variant), bound_(std::move(bound)), kind_(std::move(kind)) {
  const std::size_t n = base_.node_count();
  if (bound_.size() != n || kind_.size() != n) {
    throw InvalidParameters("bound and constraint vectors must have one entry per node");
  }
  for (NodeIndex v = 0; v < n; ++v) {
    if (bound_[v] < 0) {
      throw InfeasibleInstance(base_.id(v), "bound b' = " + std::to_string(bound_[v]) + " < 0");
    }
  }
  aux_.reserve(aux.size());
  for (auto [a, b] : aux) {
    if (a >= n || b >= n || a == b) throw InvalidParameters("aux edge with invalid endpoints");
    if (base_.id(b) < base_.id(a)) std::swap(a, b);
    const bool present = base_.has_edge(a, b);
    const bool cross = base_.color(a) != base_.color(b);
    const std::string name = "{" + base_.id(a) + ", " + base_.id(b) + "}";
    if (variant_ == InstanceVariant::Addition) {
      if (present) throw InvalidParameters("addition aux edge " + name + " is already an edge");
      if (!cross && !base_.is_blue(a)) throw InvalidParameters("red-red addition aux edge " + name);
    } else {
      if (!present) throw InvalidParameters("removal aux edge " + name + " is not an edge");
      if (!cross && base_.is_blue(a)) throw InvalidParameters("blue-blue removal aux edge " + name);
    }
    aux_.push_back(AuxEdge{a, b, cross ? EdgeClass::CrossRB : EdgeClass::MonoSameColor});
  }
  auto key = [this](const AuxEdge& e) { return std::tie(base_.id(e.u), base_.id(e.v)); };
  std::sort(aux_.begin(), aux_.end(),
            [&](const AuxEdge& x, const AuxEdge& y) { return key(x) < key(y); });
  for (std::size_t k = 1; k < aux_.size(); ++k) {
    if (aux_[k - 1].u == aux_[k].u && aux_[k - 1].v == aux_[k].v) {
      throw InvalidParameters("duplicate aux edge " + to_string(edge(k)));
    }
  }
  incident_.assign(n, {});
  for (std::size_t k = 0; k < aux_.size(); ++k) {
    incident_[aux_[k].u].push_back(k);
    incident_[aux_[k].v].push_back(k);
  }
}

std::optional<std::size_t> BMatchingInstance::find_edge(NodeIndex a, NodeIndex b) const {
  if (a == b || a >= incident_.size()) return std::nullopt;
  for (std::size_t k : incident_[a]) {
    if (aux_[k].u == b || aux_[k].v == b) return k;
  }
  return std::nullopt;
}

BMatchingInstance build_miae_instance(const ColoredGraph& g) {
  const auto n = static_cast<NodeIndex>(g.node_count());
  std::vector<std::pair<NodeIndex, NodeIndex>> aux;
  std::vector<std::int64_t> blue_aux(n, 0);
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j) || (!g.is_blue(i) && !g.is_blue(j))) continue;
      aux.emplace_back(i, j);
      if (g.is_blue(i)) ++blue_aux[j];
      if (g.is_blue(j)) ++blue_aux[i];
    }
  }
  std::vector<std::int64_t> bound(n);
  std::vector<ConstraintKind> kind(n);
  for (NodeIndex v = 0; v < n; ++v) {
    const auto c = neighbour_counts(g, v);
    if (g.is_blue(v)) {
      kind[v] = ConstraintKind::AtMost;
      bound[v] = blue_aux[v] + c.blue - c.red;
    } else {
      kind[v] = ConstraintKind::Equality;
      bound[v] = std::max<std::int64_t>(c.red - c.blue, 0);
    }
  }
  return BMatchingInstance(g, InstanceVariant::Addition, std::move(aux), std::move(bound),
                           std::move(kind));
}

BMatchingInstance build_mire_instance(const ColoredGraph& g) {
  const auto n = static_cast<NodeIndex>(g.node_count());
  std::vector<std::pair<NodeIndex, NodeIndex>> aux;
  std::vector<std::int64_t> red_aux(n, 0);
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j : g.neighbours(i)) {
      if (j < i || (g.is_blue(i) && g.is_blue(j))) continue;
      aux.emplace_back(i, j);
      if (!g.is_blue(i)) ++red_aux[j];
      if (!g.is_blue(j)) ++red_aux[i];
    }
  }
  std::vector<std::int64_t> bound(n);
  std::vector<ConstraintKind> kind(n);
  for (NodeIndex v = 0; v < n; ++v) {
    const auto c = neighbour_counts(g, v);
    if (g.is_blue(v)) {
      kind[v] = ConstraintKind::Equality;
      bound[v] = std::max<std::int64_t>(c.red - c.blue, 0);
    } else {
      kind[v] = ConstraintKind::AtMost;
      bound[v] = red_aux[v] + c.blue - c.red;
    }
  }
  return BMatchingInstance(g, InstanceVariant::Removal, std::move(aux), std::move(bound),
                           std::move(kind));
}

namespace {

bool is_zero(const Rational& r) { return r.numerator() == 0; }
bool is_one(const Rational& r) { return r.numerator() == 1 && r.denominator() == 1; }

void check_shape(const BMatchingInstance& inst, const FractionalAssignment& x) {
  if (x.size() != inst.aux_edges().size()) {
    throw InvalidParameters("assignment has " + std::to_string(x.size()) + " values for " +
                            std::to_string(inst.aux_edges().size()) + " aux edges");
  }
  for (const auto& v : x) {
    if (v < 0 || v > 1) throw InvalidParameters("assignment value outside [0, 1]");
  }
}

}  // namespace

EditSolution edits_from_assignment(const BMatchingInstance& inst, const FractionalAssignment& x) {
  check_shape(inst, x);
  EditSolution s;
  auto& target = inst.variant() == InstanceVariant::Addition ? s.added : s.removed;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!is_zero(x[k]) && !is_one(x[k])) {
      throw NotIntegral("aux edge " + to_string(inst.edge(k)) + " has fractional value");
    }
    const bool selected = is_one(x[k]);
    const bool cross = inst.aux_edges()[k].cls == EdgeClass::CrossRB;
    if (selected == cross) target.insert(inst.edge(k));
  }
  return s;
}

FractionalAssignment assignment_from_edits(const BMatchingInstance& inst, const EditSolution& s) {
  const bool addition = inst.variant() == InstanceVariant::Addition;
  const auto& edits = addition ? s.added : s.removed;
  const auto& other = addition ? s.removed : s.added;
  if (!other.empty()) {
    const auto& e = *other.begin();
    throw InvalidEdit(e.u, e.v, addition ? "removal in an addition instance"
                                         : "addition in a removal instance");
  }
  FractionalAssignment x(inst.aux_edges().size());
  std::vector<bool> touched(x.size(), false);
  for (const auto& e : edits) {
    auto a = inst.base().find(e.u);
    auto b = inst.base().find(e.v);
    std::optional<std::size_t> k;
    if (a && b) k = inst.find_edge(*a, *b);
    if (!k) throw InvalidEdit(e.u, e.v, "not an aux edge of the instance");
    touched[*k] = true;
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    const bool cross = inst.aux_edges()[k].cls == EdgeClass::CrossRB;
    x[k] = (touched[k] == cross) ? 1 : 0;
  }
  return x;
}

Rational objective_value(const BMatchingInstance& inst, const FractionalAssignment& x) {
  check_shape(inst, x);
  Rational total = 0;
  for (std::size_t k = 0; k < x.size(); ++k) total += x[k] * inst.sign(k);
  return total;
}

bool verify_degree_constraints(const BMatchingInstance& inst, const FractionalAssignment& x) {
  check_shape(inst, x);
  for (NodeIndex v = 0; v < inst.node_count(); ++v) {
    Rational sum = 0;
    for (std::size_t k : inst.incident(v)) sum += x[k];
    const Rational b = inst.bound(v);
    if (inst.kind(v) == ConstraintKind::Equality ? sum != b : sum > b) return false;
  }
  return true;
}

namespace {

void check_set(const BMatchingInstance& inst, const FractionalAssignment& x,
               const std::vector<char>& in_x, VerifyReport& rep) {
  Rational inside = 0;
  std::vector<std::size_t> boundary;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const auto& e = inst.aux_edges()[k];
    const bool a = in_x[e.u] != 0;
    const bool b = in_x[e.v] != 0;
    if (a && b) {
      inside += x[k];
    } else if (a != b) {
      boundary.push_back(k);
    }
  }
  std::int64_t bound_sum = 0;
  for (NodeIndex v = 0; v < inst.node_count(); ++v) {
    if (in_x[v]) bound_sum += inst.bound(v);
  }
  std::stable_sort(boundary.begin(), boundary.end(),
                   [&](std::size_t p, std::size_t q) { return x[p] > x[q]; });
  ++rep.sets_checked;
  Rational lhs = inside;
  for (std::size_t k = 0; k <= boundary.size(); ++k) {
    if (k > 0) lhs += x[boundary[k - 1]];
    const std::int64_t rhs = (bound_sum + static_cast<std::int64_t>(k)) / 2;
    if (lhs > rhs) {
      BlossomViolation viol;
      for (NodeIndex v = 0; v < inst.node_count(); ++v) {
        if (in_x[v]) viol.X.push_back(inst.base().id(v));
      }
      for (std::size_t i = 0; i < k; ++i) viol.F.push_back(inst.edge(boundary[i]));
      viol.lhs = lhs;
      viol.rhs = rhs;
      rep.violations.push_back(std::move(viol));
    }
  }
}

}  // namespace

VerifyReport verify_blossom_constraints(const BMatchingInstance& inst, const FractionalAssignment& x,
                                        const BlossomCheckMode& mode) {
  check_shape(inst, x);
  VerifyReport rep;
  const std::size_t n = inst.node_count();
  std::vector<char> in_x(n, 0);
  if (mode.kind == BlossomCheckMode::Kind::Exhaustive) {
    if (n > mode.exhaustive_limit || n >= 63) {
      throw TooLarge("exhaustive blossom check limited to " +
                     std::to_string(mode.exhaustive_limit) + " nodes, instance has " +
                     std::to_string(n));
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      for (std::size_t v = 0; v < n; ++v) in_x[v] = static_cast<char>((mask >> v) & 1U);
      check_set(inst, x, in_x, rep);
    }
    return rep;
  }
  if (n == 0) return rep;
  std::mt19937_64 rng(mode.seed);
  for (std::size_t s = 0; s < mode.count; ++s) {
    bool any = false;
    for (std::size_t v = 0; v < n; ++v) {
      in_x[v] = static_cast<char>(rng() & 1U);
      any = any || in_x[v];
    }
    if (!any) in_x[rng() % n] = 1;
    check_set(inst, x, in_x, rep);
  }
  return rep;
}

}  // namespace illusion
