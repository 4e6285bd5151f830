#include "illusion/colored_graph.hpp"

#include <algorithm>

#include "illusion/errors.hpp"

namespace illusion {

char color_letter(Color c) { return c == Color::Blue ? 'B' : 'R'; }

Edge Edge::make(NodeId a, NodeId b) {
  if (a == b) throw InvalidGraph("self-loop on '" + a + "'");
  if (b < a) std::swap(a, b);
  return Edge{std::move(a), std::move(b)};
}

std::string to_string(const Edge& e) { return e.u + " " + e.v; }

NodeIndex ColoredGraph::add_node(NodeId id, Color c) {
  if (index_.count(id) != 0) throw InvalidGraph("duplicate node '" + id + "'");
  const auto i = static_cast<NodeIndex>(ids_.size());
  index_.emplace(id, i);
  ids_.push_back(std::move(id));
  colors_.push_back(c);
  adj_.emplace_back();
  if (c == Color::Blue) ++blue_count_;
  return i;
}

void ColoredGraph::add_edge(const NodeId& a, const NodeId& b) {
  const NodeIndex i = index_of(a);
  const NodeIndex j = index_of(b);
  if (i == j) throw InvalidGraph("self-loop on '" + a + "'");
  if (!connect(i, j)) throw InvalidGraph("duplicate edge {" + a + ", " + b + "}");
}

bool ColoredGraph::connect(NodeIndex a, NodeIndex b) {
  if (a == b) throw InvalidGraph("self-loop on '" + ids_[a] + "'");
  auto& la = adj_[a];
  auto pos = std::lower_bound(la.begin(), la.end(), b);
  if (pos != la.end() && *pos == b) return false;
  la.insert(pos, b);
  auto& lb = adj_[b];
  lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
  ++edge_count_;
  return true;
}

bool ColoredGraph::disconnect(NodeIndex a, NodeIndex b) {
  auto& la = adj_[a];
  auto pos = std::lower_bound(la.begin(), la.end(), b);
  if (pos == la.end() || *pos != b) return false;
  la.erase(pos);
  auto& lb = adj_[b];
  lb.erase(std::lower_bound(lb.begin(), lb.end(), a));
  --edge_count_;
  return true;
}

std::optional<NodeIndex> ColoredGraph::find(const NodeId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex ColoredGraph::index_of(const NodeId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw NodeNotFound(id);
  return it->second;
}

bool ColoredGraph::has_edge(NodeIndex a, NodeIndex b) const {
  const auto& la = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  const NodeIndex other = &la == &adj_[a] ? b : a;
  return std::binary_search(la.begin(), la.end(), other);
}

bool ColoredGraph::has_edge(const Edge& e) const {
  auto a = find(e.u);
  auto b = find(e.v);
  return a && b && *a != *b && has_edge(*a, *b);
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeIndex i = 0; i < adj_.size(); ++i) {
    for (NodeIndex j : adj_[i]) {
      if (i < j) out.push_back(edge(i, j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
  return a.ids_ == b.ids_ && a.colors_ == b.colors_ && a.adj_ == b.adj_;
}

}  // namespace illusion
