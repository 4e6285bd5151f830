#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "illusion/colored_graph.hpp"
#include "illusion/rational_p.hpp"

namespace illusion {

// Nodes v1..vn. Blue count is round-half-up(blue_frac * n), raised to
// floor(n/2) + 1 when strict_majority is set. The blue set comes from a
// Fisher-Yates shuffle; then each pair (i, j), i < j, becomes an edge with
// probability edge_prob. All draws use std::mt19937_64 seeded with `seed`
// and rejection sampling, so output is identical on every platform.
ColoredGraph generate_random(std::size_t n, RationalP edge_prob, RationalP blue_frac,
                             std::uint64_t seed, bool strict_majority = false);

// Bundled example graphs: "fig2a", "fig3a", "fig4". Throws InvalidParameters.
ColoredGraph fixture_graph(std::string_view name);
std::string_view fixture_text(std::string_view name);

}  // namespace illusion
