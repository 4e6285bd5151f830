#include "illusion/generate.hpp"

#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "illusion/errors.hpp"
#include "illusion/io.hpp"

namespace illusion {

namespace {

// Uniform value in [0, bound) by rejection; std distributions are not
// specified bit-for-bit across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

constexpr std::string_view kFig2a = R"(# Two-coloured example with eight nodes; v1 and v2 are under majority illusion.
# v1-v2 was drawn with a doubled stroke; it is a single edge here.
v v1 B
v v2 R
v v3 B
v v4 R
v v5 R
v v6 B
v v7 B
v v8 B
e v1 v2
e v2 v4
e v2 v5
e v3 v4
e v3 v7
e v4 v5
e v4 v7
e v5 v6
e v5 v8
e v6 v8
)";

constexpr std::string_view kFig3a = R"(# Nine nodes, every one under majority illusion.
v v1 B
v v2 R
v v3 R
v v4 B
v v5 R
v v6 R
v v7 B
v v8 B
v v9 B
e v1 v2
e v1 v3
e v2 v3
e v2 v5
e v2 v6
e v3 v5
e v3 v6
e v4 v5
e v5 v6
e v5 v8
e v6 v7
e v6 v9
)";

constexpr std::string_view kFig4 = R"(# Red centre joined to three blues; the MIAE relaxation is fractional here.
v v1 R
v v2 B
v v3 B
v v4 B
e v1 v2
e v1 v3
e v1 v4
)";

}  // namespace

ColoredGraph generate_random(std::size_t n, RationalP edge_prob, RationalP blue_frac,
                             std::uint64_t seed, bool strict_majority) {
  std::mt19937_64 rng(seed);
  const auto num = static_cast<std::uint64_t>(blue_frac.num());
  const auto den = static_cast<std::uint64_t>(blue_frac.den());
  std::size_t blues = static_cast<std::size_t>((2 * num * n + den) / (2 * den));
  if (strict_majority && n > 0 && 2 * blues <= n) blues = n / 2 + 1;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto j = i + static_cast<std::size_t>(draw_below(rng, n - i));
    std::swap(order[i], order[j]);
  }
  std::vector<Color> colour(n, Color::Red);
  for (std::size_t i = 0; i < blues; ++i) colour[order[i]] = Color::Blue;

  ColoredGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node("v" + std::to_string(i + 1), colour[i]);
  const auto pn = static_cast<std::uint64_t>(edge_prob.num());
  const auto pd = static_cast<std::uint64_t>(edge_prob.den());
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = i + 1; j < n; ++j) {
      if (draw_below(rng, pd) < pn) g.connect(i, j);
    }
  }
  return g;
}

std::string_view fixture_text(std::string_view name) {
  if (name == "fig2a") return kFig2a;
  if (name == "fig3a") return kFig3a;
  if (name == "fig4") return kFig4;
  throw InvalidParameters("unknown fixture '" + std::string(name) + "'");
}

ColoredGraph fixture_graph(std::string_view name) { return parse_graph(fixture_text(name)); }

}  // namespace illusion
