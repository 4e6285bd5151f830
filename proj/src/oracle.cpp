#include "illusion/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "illusion/errors.hpp"

namespace illusion {

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 0) return std::nullopt;
  return v;
}

struct Candidate {
  NodeIndex a;
  NodeIndex b;
  bool add;  // false: removal
};

class Search {
 public:
  Search(const ColoredGraph& g, RationalP p, std::vector<Candidate> pool,
         std::optional<std::int64_t> time_cap_ms)
      : g_(g), p_(p), pool_(std::move(pool)), time_cap_ms_(time_cap_ms) {
    counts_.reserve(g.node_count());
    for (NodeIndex v = 0; v < g.node_count(); ++v) counts_.push_back(neighbour_counts(g, v));
    start_ = std::chrono::steady_clock::now();
  }

  // Lexicographically first t-subset that leaves no node under illusion.
  std::optional<std::vector<std::size_t>> first_of_size(std::size_t t) {
    chosen_.clear();
    if (recurse(0, t)) return chosen_;
    return std::nullopt;
  }

  bool timed_out() const { return timed_out_; }

 private:
  const ColoredGraph& g_;
  RationalP p_;
  std::vector<Candidate> pool_;
  std::optional<std::int64_t> time_cap_ms_;
  std::vector<NeighbourCounts> counts_;
  std::vector<std::size_t> chosen_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t leaves_ = 0;
  bool timed_out_ = false;

  void toggle(const Candidate& c, int dir) {
    const int delta = c.add ? dir : -dir;
    (g_.is_blue(c.b) ? counts_[c.a].blue : counts_[c.a].red) += delta;
    (g_.is_blue(c.a) ? counts_[c.b].blue : counts_[c.b].red) += delta;
  }

  bool leaf_ok() {
    if (time_cap_ms_ && (++leaves_ & 0xFFFU) == 0) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
      if (ms > *time_cap_ms_) timed_out_ = true;
    }
    for (const auto& c : counts_) {
      if (is_under_illusion(c, p_)) return false;
    }
    return true;
  }

  bool recurse(std::size_t from, std::size_t left) {
    if (timed_out_) return false;
    if (left == 0) return leaf_ok();
    for (std::size_t i = from; i + left <= pool_.size(); ++i) {
      chosen_.push_back(i);
      toggle(pool_[i], 1);
      const bool found = recurse(i + 1, left - 1);
      toggle(pool_[i], -1);
      if (found) return true;
      chosen_.pop_back();
      if (timed_out_) return false;
    }
    return false;
  }
};

}  // namespace

SearchBudget SearchBudget::defaults() {
  SearchBudget b;
  if (const char* env = std::getenv("ILLUSION_GUARD_OVERRIDE")) {
    const std::string_view text(env);
    const auto comma = text.find(',');
    if (auto v = parse_int(text.substr(0, comma))) b.max_candidates = *v;
    if (comma != std::string_view::npos) {
      if (auto v = parse_int(text.substr(comma + 1))) b.max_cost = *v;
    }
  }
  return b;
}

OracleResult brute_force_min_edits(const ColoredGraph& g, const ProblemVariant& variant,
                                   const SearchBudget& budget) {
  if (budget.max_cost < 0 || budget.max_candidates < 0 ||
      (budget.time_cap_ms && *budget.time_cap_ms < 0)) {
    throw InvalidParameters("search budget fields must be non-negative");
  }
  const auto discipline = variant.discipline();
  std::vector<std::pair<Edge, Candidate>> keyed;
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    for (NodeIndex j = i + 1; j < g.node_count(); ++j) {
      const bool present = g.has_edge(i, j);
      if (present ? discipline == EditDiscipline::AddOnly
                  : discipline == EditDiscipline::RemoveOnly) {
        continue;
      }
      keyed.emplace_back(g.edge(i, j), Candidate{i, j, !present});
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  OracleResult result;
  result.pool_size = static_cast<std::int64_t>(keyed.size());
  if (result.pool_size > budget.max_candidates) {
    result.status = OracleStatus::TooLarge;
    return result;
  }
  std::vector<Candidate> pool;
  pool.reserve(keyed.size());
  for (const auto& [e, c] : keyed) pool.push_back(c);

  Search search(g, variant.p(), pool, budget.time_cap_ms);
  const std::int64_t top = std::min<std::int64_t>(budget.max_cost, result.pool_size);
  for (std::int64_t t = 0; t <= top; ++t) {
    const auto hit = search.first_of_size(static_cast<std::size_t>(t));
    if (search.timed_out()) {
      result.status = OracleStatus::TooLarge;
      return result;
    }
    if (!hit) continue;
    EditSolution s;
    for (std::size_t i : *hit) (keyed[i].second.add ? s.added : s.removed).insert(keyed[i].first);
    if (!illusion_report(apply_edits(g, s), variant.p()).illusion_free) {
      throw std::logic_error("oracle witness failed the independent illusion check");
    }
    result.status = OracleStatus::Found;
    result.solution = std::move(s);
    return result;
  }
  result.status = OracleStatus::NoneWithinBudget;
  return result;
}

bool brute_force_is_illusion_free_reachable(const ColoredGraph& g, const ProblemVariant& variant,
                                            RationalP p, std::int64_t k, SearchBudget budget) {
  const ProblemVariant v(variant.kind(), p);
  budget.max_cost = k;
  const auto out = brute_force_min_edits(g, v, budget);
  if (out.status == OracleStatus::TooLarge) {
    throw TooLarge("candidate pool of " + std::to_string(out.pool_size) + " exceeds the guard");
  }
  return out.status == OracleStatus::Found;
}

}  // namespace illusion
