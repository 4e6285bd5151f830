#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace illusion {

struct WeightedEdge {
  std::uint32_t a;
  std::uint32_t b;
  std::int64_t weight;
};

// Maximum-weight matching on a general graph (Edmonds' blossom algorithm with
// dual variables, O(n^3)). With max_cardinality set, the result maximizes
// weight among maximum-cardinality matchings. Returns mate[v] (-1 when
// unmatched). Integer weights keep all dual arithmetic exact.
std::vector<int> max_weight_matching(std::size_t node_count, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality);

}  // namespace illusion
