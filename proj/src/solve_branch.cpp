#include "tfes/solve_branch.hpp"

#include <algorithm>
#include <cassert>

namespace tfes {

namespace {

struct BranchSearch {
    PathModel model;
    ProblemTarget target;
    std::optional<Solution> best;

    std::vector<TimeEdge> picked_edges;
    std::vector<Connection> picked_conns;

    std::size_t picked() const {
        return target == ProblemTarget::edge_set ? picked_edges.size() : picked_conns.size();
    }

    void record_current() {
        Solution s;
        s.kind = target;
        s.time_edges = picked_edges;
        s.connections = picked_conns;
        std::sort(s.time_edges.begin(), s.time_edges.end());
        std::sort(s.connections.begin(), s.connections.end());
        best = std::move(s);
    }

    void run(const TemporalGraph& g, int budget) {
        // a deeper solution has size >= picked()+..., so only branches
        // that can still undercut the incumbent are worth entering
        if (best && picked() >= best->size()) return;
        if (budget == 0) {
            if (!has_cycle(g, model)) record_current();
            return;
        }
        auto cycle = shortest_cycle(g, model);
        if (!cycle) {
            record_current();  // strictly smaller than the incumbent by the check above
            return;
        }
        if (target == ProblemTarget::edge_set) {
            for (const WalkStep& step : cycle->steps) {
                picked_edges.push_back(step.edge);
                run(remove_time_edges(g, {step.edge}), budget - 1);
                picked_edges.pop_back();
            }
        } else {
            std::vector<Connection> seen;
            for (const WalkStep& step : cycle->steps) {
                // a cycle visits each vertex once, so connections cannot
                // repeat; branch each at most once regardless
                if (std::find(seen.begin(), seen.end(), step.edge.conn) != seen.end()) {
                    assert(false && "duplicate connection on a cycle");
                    continue;
                }
                seen.push_back(step.edge.conn);
                picked_conns.push_back(step.edge.conn);
                run(remove_connections(g, {step.edge.conn}), budget - 1);
                picked_conns.pop_back();
            }
        }
    }
};

}  // namespace

std::optional<Solution> solve_branch(const TemporalGraph& g, int k, ProblemVariant variant) {
    if (k < 0) throw std::invalid_argument("solve_branch: negative budget");
    BranchSearch search{variant.model, variant.target, std::nullopt, {}, {}};
    search.run(g, k);
    return search.best;
}

Solution solve_branch_optimum(const TemporalGraph& g, ProblemVariant variant) {
    const int limit = static_cast<int>(variant.target == ProblemTarget::edge_set
                                           ? g.edge_count()
                                           : underlying(g).edges().size());
    for (int k = 0; k <= limit; ++k) {
        if (auto s = solve_branch(g, k, variant)) return *s;
    }
    // removing every edge/connection leaves no cycle, so unreachable
    assert(false && "full removal must be feasible");
    return Solution{variant.target, {}, {}};
}

}  // namespace tfes
