#include "tfes/reach.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>

namespace tfes {

namespace {

constexpr TimeLabel kInf = std::numeric_limits<TimeLabel>::max();

struct Adjacency {
    // per vertex: (edge, other endpoint), in canonical edge order
    std::vector<std::vector<std::pair<TimeEdge, VertexId>>> out;

    explicit Adjacency(const TemporalGraph& g) : out(g.vertex_count() + 1) {
        for (const auto& e : g.edges()) {
            out[e.conn.u].emplace_back(e, e.conn.v);
            out[e.conn.v].emplace_back(e, e.conn.u);
        }
    }
};

void check_vertex(const TemporalGraph& g, VertexId v, const char* what) {
    if (v < 1 || v > g.vertex_count())
        throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                                " outside [1," + std::to_string(g.vertex_count()) + "]");
}

// Seed value such that the uniform step rule (label > arr for strict,
// label >= arr for non-strict) enforces "first label >= start".
TimeLabel seed_arrival(TimeLabel start, PathModel model) {
    return model == PathModel::strict ? start - 1 : start;
}

bool step_ok(TimeLabel label, TimeLabel arrival, PathModel model) {
    return model == PathModel::strict ? label > arrival : label >= arrival;
}

// Earliest arrival label per vertex over temporal walks from src whose
// first label is >= start, using only labels <= t_max and avoiding the
// forbidden connection. arr[src] holds the seed, not a real arrival.
// Sweeps label groups in increasing order; within a group the non-strict
// model additionally closes same-label chains.
std::vector<TimeLabel> earliest_arrival(const TemporalGraph& g, VertexId src, TimeLabel start,
                                        PathModel model, const std::optional<Connection>& forbidden,
                                        TimeLabel t_max) {
    const auto& edges = g.edges();  // sorted by (t, u, v)
    std::vector<TimeLabel> arr(g.vertex_count() + 1, kInf);
    arr[src] = seed_arrival(start, model);

    std::size_t i = 0;
    while (i < edges.size() && edges[i].t <= t_max) {
        const TimeLabel t = edges[i].t;
        std::size_t group_end = i;
        while (group_end < edges.size() && edges[group_end].t == t) ++group_end;

        if (model == PathModel::strict) {
            // same-label chaining is impossible, one relaxation suffices
            for (std::size_t j = i; j < group_end; ++j) {
                const auto& e = edges[j];
                if (forbidden && e.conn == *forbidden) continue;
                if (step_ok(t, arr[e.conn.u], model) && t < arr[e.conn.v]) arr[e.conn.v] = t;
                if (step_ok(t, arr[e.conn.v], model) && t < arr[e.conn.u]) arr[e.conn.u] = t;
            }
        } else {
            // close the label group: any vertex already reachable with
            // arrival <= t spreads through the whole group component
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t j = i; j < group_end; ++j) {
                    const auto& e = edges[j];
                    if (forbidden && e.conn == *forbidden) continue;
                    if (arr[e.conn.u] <= t && t < arr[e.conn.v]) {
                        arr[e.conn.v] = t;
                        changed = true;
                    }
                    if (arr[e.conn.v] <= t && t < arr[e.conn.u]) {
                        arr[e.conn.u] = t;
                        changed = true;
                    }
                }
            }
        }
        i = group_end;
    }
    return arr;
}

bool reaches(const TemporalGraph& g, VertexId src, VertexId dst, TimeLabel start, PathModel model,
             const std::optional<Connection>& forbidden, TimeLabel t_max) {
    return earliest_arrival(g, src, start, model, forbidden, t_max)[dst] != kInf;
}

}  // namespace

namespace {

std::optional<TemporalWalk> min_hop_path_on(const Adjacency& adj, int n, VertexId src,
                                            VertexId dst, TimeLabel earliest_start,
                                            PathModel model,
                                            const std::optional<Connection>& forbidden,
                                            int max_hops) {
    struct Parent {
        VertexId prev = 0;
        TimeEdge edge;
    };

    // level h holds, per vertex, the minimal arrival label over h-step
    // walks; minimal arrival dominates for every extension, and the
    // first level reaching dst is the minimum hop count over paths
    std::vector<TimeLabel> cur(n + 1, kInf), nxt(n + 1, kInf);
    cur[src] = seed_arrival(earliest_start, model);
    std::vector<std::vector<Parent>> parents;

    for (int hop = 1; hop <= max_hops; ++hop) {
        std::fill(nxt.begin(), nxt.end(), kInf);
        parents.emplace_back(n + 1);
        bool progressed = false;
        for (VertexId v = 1; v <= n; ++v) {
            if (cur[v] == kInf) continue;
            for (const auto& [edge, w] : adj.out[v]) {
                if (forbidden && edge.conn == *forbidden) continue;
                if (!step_ok(edge.t, cur[v], model)) continue;
                if (edge.t < nxt[w]) {
                    nxt[w] = edge.t;
                    parents.back()[w] = Parent{v, edge};
                    progressed = true;
                }
            }
        }
        if (nxt[dst] != kInf) {
            TemporalWalk walk;
            walk.steps.resize(hop);
            VertexId at = dst;
            for (int h = hop; h >= 1; --h) {
                const Parent& p = parents[h - 1][at];
                walk.steps[h - 1] = WalkStep{p.edge, p.prev, at};
                at = p.prev;
            }
            assert(at == src);
#ifndef NDEBUG
            // a first-level hit cannot contain a repeated vertex: the
            // shortcut of such a walk would have been found earlier
            std::vector<VertexId> seen{walk.source()};
            for (const auto& s : walk.steps) {
                assert(std::find(seen.begin(), seen.end(), s.to) == seen.end());
                seen.push_back(s.to);
            }
#endif
            return walk;
        }
        cur.swap(nxt);
        if (!progressed) break;
    }
    return std::nullopt;
}

}  // namespace

std::optional<TemporalWalk> min_hop_path(const TemporalGraph& g, VertexId src, VertexId dst,
                                         TimeLabel earliest_start, PathModel model,
                                         std::optional<Connection> forbidden) {
    check_vertex(g, src, "min_hop_path");
    check_vertex(g, dst, "min_hop_path");
    if (src == dst) throw std::invalid_argument("min_hop_path: src equals dst");
    if (earliest_start < 1) throw std::invalid_argument("min_hop_path: earliest_start < 1");
    const Adjacency adj(g);
    return min_hop_path_on(adj, g.vertex_count(), src, dst, earliest_start, model, forbidden,
                           g.vertex_count() - 1);
}

std::optional<TemporalWalk> shortest_cycle(const TemporalGraph& g, PathModel model) {
    const Adjacency adj(g);
    const int n = g.vertex_count();
    std::optional<TemporalWalk> best;
    for (const TimeEdge& anchor : g.edges()) {
        const std::array<std::pair<VertexId, VertexId>, 2> orientations = {
            std::pair{anchor.conn.u, anchor.conn.v}, std::pair{anchor.conn.v, anchor.conn.u}};
        for (const auto& [x, y] : orientations) {
            // anchor carries the cycle's minimum label, so the closing
            // path starts no earlier than it
            const TimeLabel start = model == PathModel::strict ? anchor.t + 1 : anchor.t;
            // only closing paths that strictly undercut the incumbent matter
            const int max_hops =
                best ? static_cast<int>(best->length()) - 2 : n - 1;
            auto back = min_hop_path_on(adj, n, y, x, start, model, anchor.conn, max_hops);
            if (!back) continue;
            const std::size_t len = back->steps.size() + 1;
            if (!best || len < best->length()) {
                TemporalWalk cycle;
                cycle.steps.reserve(len);
                cycle.steps.push_back(WalkStep{anchor, x, y});
                cycle.steps.insert(cycle.steps.end(), back->steps.begin(), back->steps.end());
                best = std::move(cycle);
            }
            if (best->length() == 3) return best;
        }
    }
    return best;
}

bool has_cycle(const TemporalGraph& g, PathModel model) {
    for (const TimeEdge& anchor : g.edges()) {
        const TimeLabel start = model == PathModel::strict ? anchor.t + 1 : anchor.t;
        if (reaches(g, anchor.conn.v, anchor.conn.u, start, model, anchor.conn, g.lifetime()))
            return true;
        if (reaches(g, anchor.conn.u, anchor.conn.v, start, model, anchor.conn, g.lifetime()))
            return true;
    }
    return false;
}

bool verify_feedback_edge_set(const TemporalGraph& g, const std::vector<TimeEdge>& sol,
                              PathModel model) {
    for (const auto& e : sol)
        if (!g.has_edge(e))
            throw std::invalid_argument("verify_feedback_edge_set: " + to_string(e) +
                                        " not in graph");
    return !has_cycle(remove_time_edges(g, sol), model);
}

bool verify_feedback_connection_set(const TemporalGraph& g, const std::vector<Connection>& sol,
                                    PathModel model) {
    const StaticGraph under = underlying(g);
    for (const auto& c : sol)
        if (!under.has_edge(c))
            throw std::invalid_argument("verify_feedback_connection_set: " + to_string(c) +
                                        " not an underlying edge");
    return !has_cycle(remove_connections(g, sol), model);
}

ReachabilityMatrix reachability_matrix(const TemporalGraph& g, TimeLabel t, PathModel model) {
    if (t < 0 || t > g.lifetime())
        throw std::out_of_range("reachability_matrix: label " + std::to_string(t) +
                                " outside [0," + std::to_string(g.lifetime()) + "]");
    const int n = g.vertex_count();
    ReachabilityMatrix m(n);
    for (VertexId i = 1; i <= n; ++i) {
        auto arr = earliest_arrival(g, i, 1, model, std::nullopt, t);
        for (VertexId j = 1; j <= n; ++j)
            if (j != i && arr[j] != kInf) m.set(i, j, true);
    }
    // diagonal: anchor a cycle on each incident edge as its first step
    for (const TimeEdge& e : g.edges()) {
        if (e.t > t) break;
        const TimeLabel start = model == PathModel::strict ? e.t + 1 : e.t;
        for (const auto& [x, y] :
             {std::pair{e.conn.u, e.conn.v}, std::pair{e.conn.v, e.conn.u}}) {
            if (!m.at(x, x) && reaches(g, y, x, start, model, e.conn, t)) m.set(x, x, true);
        }
    }
    return m;
}

}  // namespace tfes
