#include "tfes/solve_exhaustive.hpp"

#include <string>

#include "tfes/detail/combinations.hpp"

namespace tfes {

namespace {

void check_guard(std::size_t count, bool force, const char* what) {
    if (!force && count > kExhaustiveEdgeGuard)
        throw ResourceLimitError(std::string(what) + ": " + std::to_string(count) +
                                 " items exceed the enumeration guard of " +
                                 std::to_string(kExhaustiveEdgeGuard));
}

// First feasible subset in (cardinality, lexicographic) order — a
// minimum by construction.
template <typename Item, typename Feasible>
std::optional<std::vector<Item>> minimum_feasible_subset(const std::vector<Item>& all,
                                                         std::size_t max_c, Feasible&& feasible) {
    for (std::size_t c = 0; c <= max_c; ++c) {
        auto pick = detail::first_combination(c);
        do {
            std::vector<Item> subset;
            subset.reserve(c);
            for (auto idx : pick) subset.push_back(all[idx]);
            if (feasible(subset)) return subset;
        } while (detail::next_combination(pick, all.size()));
    }
    return std::nullopt;
}

}  // namespace

std::optional<Solution> solve_exhaustive_edges(const TemporalGraph& g, PathModel model,
                                               std::optional<int> cap, bool force) {
    check_guard(g.edge_count(), force, "solve_exhaustive_edges");
    const std::size_t m = g.edge_count();
    const std::size_t max_c = cap ? std::min<std::size_t>(std::max(*cap, 0), m) : m;
    auto hit = minimum_feasible_subset(g.edges(), max_c, [&](const std::vector<TimeEdge>& sub) {
        return verify_feedback_edge_set(g, sub, model);
    });
    if (!hit) return std::nullopt;
    return Solution{ProblemTarget::edge_set, std::move(*hit), {}};
}

std::optional<Solution> solve_exhaustive_connections(const TemporalGraph& g, PathModel model,
                                                     std::optional<int> cap, bool force) {
    const StaticGraph under = underlying(g);
    check_guard(under.edges().size(), force, "solve_exhaustive_connections");
    const std::size_t m = under.edges().size();
    const std::size_t max_c = cap ? std::min<std::size_t>(std::max(*cap, 0), m) : m;
    auto hit =
        minimum_feasible_subset(under.edges(), max_c, [&](const std::vector<Connection>& sub) {
            return verify_feedback_connection_set(g, sub, model);
        });
    if (!hit) return std::nullopt;
    return Solution{ProblemTarget::connection_set, {}, std::move(*hit)};
}

}  // namespace tfes
