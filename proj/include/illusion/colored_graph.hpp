#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace illusion {

using NodeId = std::string;
using NodeIndex = std::uint32_t;

enum class Color : std::uint8_t { Blue, Red };

char color_letter(Color c);

// Unordered node pair, stored with u < v lexicographically.
struct Edge {
  NodeId u;
  NodeId v;

  // Canonicalizes the pair. Throws InvalidGraph on a self-loop.
  static Edge make(NodeId a, NodeId b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// Simple undirected graph with a colour per node. Nodes keep insertion
// order; adjacency lists are kept sorted by node index.
class ColoredGraph {
 public:
  NodeIndex add_node(NodeId id, Color c);
  // Throws NodeNotFound for unknown endpoints, InvalidGraph for a self-loop
  // or an edge that is already present.
  void add_edge(const NodeId& a, const NodeId& b);
  // Index-based mutators; return false when nothing changed.
  bool connect(NodeIndex a, NodeIndex b);
  bool disconnect(NodeIndex a, NodeIndex b);

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t blue_count() const { return blue_count_; }
  std::size_t red_count() const { return ids_.size() - blue_count_; }

  const NodeId& id(NodeIndex i) const { return ids_[i]; }
  Color color(NodeIndex i) const { return colors_[i]; }
  bool is_blue(NodeIndex i) const { return colors_[i] == Color::Blue; }
  std::optional<NodeIndex> find(const NodeId& id) const;
  // Throws NodeNotFound.
  NodeIndex index_of(const NodeId& id) const;
  bool contains(const NodeId& id) const { return find(id).has_value(); }

  std::span<const NodeIndex> neighbours(NodeIndex i) const { return adj_[i]; }
  std::size_t degree(NodeIndex i) const { return adj_[i].size(); }
  bool has_edge(NodeIndex a, NodeIndex b) const;
  // False when either endpoint is unknown.
  bool has_edge(const Edge& e) const;

  // All edges, canonical and sorted.
  std::vector<Edge> edges() const;
  Edge edge(NodeIndex a, NodeIndex b) const { return Edge::make(ids_[a], ids_[b]); }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b);

 private:
  std::vector<NodeId> ids_;
  std::vector<Color> colors_;
  std::vector<std::vector<NodeIndex>> adj_;
  std::unordered_map<NodeId, NodeIndex> index_;
  std::size_t edge_count_ = 0;
  std::size_t blue_count_ = 0;
};

}  // namespace illusion
