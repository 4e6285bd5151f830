#include "illusion/bmatching.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "illusion/errors.hpp"

namespace illusion {

GadgetGraph build_gadget(const BMatchingInstance& inst) {
  GadgetGraph g;
  const std::size_t n = inst.node_count();
  const auto& aux = inst.aux_edges();
  std::uint32_t next = 0;
  auto add = [&](std::uint32_t a, std::uint32_t b, std::int64_t w, GadgetOrigin o) {
    g.edges.push_back(WeightedEdge{a, b, w});
    g.provenance.push_back(o);
  };

  g.copies.resize(n);
  g.helper.resize(n);
  std::int64_t total_copies = 0;
  for (NodeIndex v = 0; v < n; ++v) {
    std::int64_t c = inst.bound(v);
    if (inst.kind(v) == ConstraintKind::AtMost) {
      c = std::min<std::int64_t>(c, static_cast<std::int64_t>(inst.incident(v).size()));
    }
    for (std::int64_t i = 0; i < c; ++i) g.copies[v].push_back(next++);
    total_copies += c;
  }

  g.ports.reserve(aux.size());
  for (std::size_t k = 0; k < aux.size(); ++k) {
    const std::uint32_t pu = next++;
    const std::uint32_t pv = next++;
    g.ports.emplace_back(pu, pv);
    add(pu, pv, -inst.sign(k), {GadgetOrigin::Kind::Skip, k});
    g.offset += inst.sign(k);
    for (std::uint32_t c : g.copies[aux[k].u]) add(c, pu, 0, {GadgetOrigin::Kind::Use, k});
    for (std::uint32_t c : g.copies[aux[k].v]) add(c, pv, 0, {GadgetOrigin::Kind::Use, k});
  }

  const GadgetOrigin slack{GadgetOrigin::Kind::Slack, 0};
  std::vector<std::uint32_t> helpers;
  for (NodeIndex v = 0; v < n; ++v) {
    const auto& cs = g.copies[v];
    if (inst.kind(v) != ConstraintKind::AtMost || cs.empty()) continue;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) add(cs[i], cs[j], 0, slack);
    }
    const std::uint32_t h = next++;
    g.helper[v] = h;
    helpers.push_back(h);
    for (std::uint32_t c : cs) add(c, h, 0, slack);
  }
  for (std::size_t i = 0; i < helpers.size(); ++i) {
    for (std::size_t j = i + 1; j < helpers.size(); ++j) add(helpers[i], helpers[j], 0, slack);
  }
  // Helpers that do not absorb a copy pair up globally; their number has the
  // parity of (#helpers - total copies).
  if ((static_cast<std::int64_t>(helpers.size()) - total_copies) % 2 != 0) {
    g.dummy = next++;
    for (std::uint32_t h : helpers) add(*g.dummy, h, 0, slack);
  }
  g.node_count = next;
  return g;
}

std::optional<MatchingResult> max_weight_perfect_matching(std::size_t node_count,
                                                          const std::vector<WeightedEdge>& edges) {
  if (node_count % 2 != 0) return std::nullopt;
  MatchingResult result;
  if (node_count == 0) return result;
  // Shifting every weight by a constant changes all perfect matchings alike.
  std::int64_t min_w = 0;
  for (const auto& e : edges) min_w = std::min(min_w, e.weight);
  std::vector<WeightedEdge> shifted = edges;
  std::unordered_map<std::uint64_t, std::int64_t> weight_of;
  for (auto& e : shifted) {
    const std::uint64_t key = (std::uint64_t{std::min(e.a, e.b)} << 32) | std::max(e.a, e.b);
    auto [it, inserted] = weight_of.emplace(key, e.weight);
    if (!inserted) it->second = std::max(it->second, e.weight);
    e.weight -= min_w;
  }
  const auto mate = max_weight_matching(node_count, shifted, true);
  for (std::uint32_t v = 0; v < node_count; ++v) {
    if (mate[v] < 0) return std::nullopt;
    const auto w = static_cast<std::uint32_t>(mate[v]);
    if (v < w) {
      result.pairs.emplace_back(v, w);
      result.total_weight += weight_of.at((std::uint64_t{v} << 32) | w);
    }
  }
  return result;
}

std::optional<MatchingResult> max_weight_perfect_matching(const GadgetGraph& g) {
  return max_weight_perfect_matching(g.node_count, g.edges);
}

FractionalAssignment decode_matching(const BMatchingInstance& inst, const GadgetGraph& g,
                                     const MatchingResult& m) {
  std::vector<std::int64_t> mate(g.node_count, -1);
  for (auto [a, b] : m.pairs) {
    mate[a] = b;
    mate[b] = a;
  }
  FractionalAssignment x(inst.aux_edges().size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const auto [pu, pv] = g.ports[k];
    x[k] = mate[pu] == static_cast<std::int64_t>(pv) ? 0 : 1;
  }
  return x;
}

MatchingResult extend_to_perfect_matching(const BMatchingInstance& inst, const GadgetGraph& g,
                                          const FractionalAssignment& x) {
  if (!verify_degree_constraints(inst, x)) {
    throw InvalidParameters("assignment violates the degree constraints");
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<std::size_t> used(inst.node_count(), 0);
  const auto& aux = inst.aux_edges();
  for (std::size_t k = 0; k < aux.size(); ++k) {
    // Rational vs integer == recurses forever under C++20 with Boost 1.74.
    if (x[k] == Rational(0)) {
      pairs.push_back(g.ports[k]);
    } else if (x[k] == Rational(1)) {
      pairs.emplace_back(g.copies[aux[k].u].at(used[aux[k].u]++), g.ports[k].first);
      pairs.emplace_back(g.copies[aux[k].v].at(used[aux[k].v]++), g.ports[k].second);
    } else {
      throw InvalidParameters("assignment is not integral");
    }
  }
  std::vector<std::uint32_t> global;
  for (NodeIndex v = 0; v < inst.node_count(); ++v) {
    if (!g.helper[v]) continue;
    std::vector<std::uint32_t> rest(g.copies[v].begin() + static_cast<std::ptrdiff_t>(used[v]),
                                    g.copies[v].end());
    if (rest.size() % 2 == 1) {
      pairs.emplace_back(rest.back(), *g.helper[v]);
      rest.pop_back();
    } else {
      global.push_back(*g.helper[v]);
    }
    for (std::size_t i = 0; i + 1 < rest.size(); i += 2) pairs.emplace_back(rest[i], rest[i + 1]);
  }
  if (g.dummy) global.push_back(*g.dummy);
  if (global.size() % 2 != 0) throw std::logic_error("gadget parity mismatch");
  for (std::size_t i = 0; i < global.size(); i += 2) pairs.emplace_back(global[i], global[i + 1]);

  std::unordered_map<std::uint64_t, std::int64_t> weight_of;
  for (const auto& e : g.edges) {
    weight_of[(std::uint64_t{std::min(e.a, e.b)} << 32) | std::max(e.a, e.b)] = e.weight;
  }
  MatchingResult m;
  for (auto [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    m.pairs.emplace_back(a, b);
    m.total_weight += weight_of.at((std::uint64_t{a} << 32) | b);
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

FractionalAssignment solve_b_matching(const BMatchingInstance& inst) {
  const auto gadget = build_gadget(inst);
  const auto m = max_weight_perfect_matching(gadget);
  if (!m) throw Infeasible("no assignment satisfies every Equality degree row");
  auto x = decode_matching(inst, gadget, *m);
#ifndef NDEBUG
  assert(verify_degree_constraints(inst, x));
  assert(objective_value(inst, x) == Rational(gadget.offset + m->total_weight));
  if (inst.node_count() <= 12) {
    assert(verify_blossom_constraints(inst, x, BlossomCheckMode::exhaustive()).ok());
  }
#endif
  return x;
}

namespace {

class BruteForce {
 public:
  explicit BruteForce(const BMatchingInstance& inst)
      : inst_(inst),
        aux_(inst.aux_edges()),
        load_(inst.node_count(), 0),
        remaining_(inst.node_count(), 0),
        choice_(aux_.size(), 0) {
    for (NodeIndex v = 0; v < inst.node_count(); ++v) {
      remaining_[v] = static_cast<std::int64_t>(inst.incident(v).size());
    }
    for (std::size_t k = 0; k < aux_.size(); ++k) positive_left_ += inst.sign(k) > 0 ? 1 : 0;
  }

  std::optional<std::vector<char>> run() {
    search(0, 0);
    return best_;
  }

 private:
  const BMatchingInstance& inst_;
  const std::vector<AuxEdge>& aux_;
  std::vector<std::int64_t> load_;
  std::vector<std::int64_t> remaining_;
  std::vector<char> choice_;
  std::int64_t positive_left_ = 0;
  std::optional<std::vector<char>> best_;
  std::int64_t best_value_ = 0;

  bool can_finish(NodeIndex v) const {
    if (load_[v] > inst_.bound(v)) return false;
    return inst_.kind(v) != ConstraintKind::Equality || load_[v] + remaining_[v] >= inst_.bound(v);
  }

  void search(std::size_t k, std::int64_t value) {
    if (best_ && value + positive_left_ <= best_value_) return;
    if (k == aux_.size()) {
      for (NodeIndex v = 0; v < inst_.node_count(); ++v) {
        if (inst_.kind(v) == ConstraintKind::Equality && load_[v] != inst_.bound(v)) return;
      }
      best_ = choice_;
      best_value_ = value;
      return;
    }
    const auto [u, v, cls] = aux_[k];
    const int sign = inst_.sign(k);
    --remaining_[u];
    --remaining_[v];
    if (sign > 0) --positive_left_;
    for (char pick : {char{1}, char{0}}) {
      choice_[k] = pick;
      load_[u] += pick;
      load_[v] += pick;
      if (can_finish(u) && can_finish(v)) search(k + 1, value + (pick ? sign : 0));
      load_[u] -= pick;
      load_[v] -= pick;
    }
    choice_[k] = 0;
    ++remaining_[u];
    ++remaining_[v];
    if (sign > 0) ++positive_left_;
  }
};

}  // namespace

FractionalAssignment brute_force_b_matching(const BMatchingInstance& inst,
                                            std::size_t max_aux_edges) {
  if (inst.aux_edges().size() > max_aux_edges) {
    throw TooLarge("brute-force b-matching limited to " + std::to_string(max_aux_edges) +
                   " aux edges, instance has " + std::to_string(inst.aux_edges().size()));
  }
  BruteForce search(inst);
  const auto best = search.run();
  if (!best) throw Infeasible("no assignment satisfies every Equality degree row");
  FractionalAssignment x(best->size());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = (*best)[k];
  return x;
}

}  // namespace illusion
