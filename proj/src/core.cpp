#include "tfes/core.hpp"

#include <algorithm>

namespace tfes {

std::string to_string(const Connection& c) {
    return "{" + std::to_string(c.u) + "," + std::to_string(c.v) + "}";
}

std::string to_string(const TimeEdge& e) {
    return "(" + to_string(e.conn) + "," + std::to_string(e.t) + ")";
}

namespace {

void check_vertex_range(VertexId v, int n, const char* what) {
    if (v < 1 || v > n)
        throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                                " outside [1," + std::to_string(n) + "]");
}

}  // namespace

StaticGraph::StaticGraph(int n, std::vector<Connection> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("static graph: negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& e : edges_) {
        check_vertex_range(e.u, n_, "static graph");
        check_vertex_range(e.v, n_, "static graph");
    }
}

bool StaticGraph::has_edge(const Connection& c) const {
    return std::binary_search(edges_.begin(), edges_.end(), c);
}

TemporalGraph::TemporalGraph(int n, TimeLabel tau, std::vector<TimeEdge> edges)
    : n_(n), tau_(tau), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("temporal graph: negative vertex count");
    if (tau < 0) throw std::invalid_argument("temporal graph: negative lifetime");
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("temporal graph: duplicate time-edge");
    for (const auto& e : edges_) {
        check_vertex_range(e.conn.u, n_, "temporal graph");
        check_vertex_range(e.conn.v, n_, "temporal graph");
        if (e.t < 1 || e.t > tau_)
            throw std::out_of_range("temporal graph: label " + std::to_string(e.t) +
                                    " outside [1," + std::to_string(tau_) + "]");
    }
}

bool TemporalGraph::has_edge(const TimeEdge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

StaticGraph layer(const TemporalGraph& g, TimeLabel t) {
    if (t < 1 || t > g.lifetime())
        throw std::out_of_range("layer: label " + std::to_string(t) + " outside [1," +
                                std::to_string(g.lifetime()) + "]");
    std::vector<Connection> conns;
    for (const auto& e : g.edges())
        if (e.t == t) conns.push_back(e.conn);
    return StaticGraph(g.vertex_count(), std::move(conns));
}

TemporalGraph prefix(const TemporalGraph& g, TimeLabel t) {
    if (t < 0 || t > g.lifetime())
        throw std::out_of_range("prefix: label " + std::to_string(t) + " outside [0," +
                                std::to_string(g.lifetime()) + "]");
    std::vector<TimeEdge> kept;
    for (const auto& e : g.edges())
        if (e.t <= t) kept.push_back(e);
    return TemporalGraph(g.vertex_count(), t, std::move(kept));
}

StaticGraph underlying(const TemporalGraph& g) {
    std::vector<Connection> conns;
    conns.reserve(g.edge_count());
    for (const auto& e : g.edges()) conns.push_back(e.conn);
    return StaticGraph(g.vertex_count(), std::move(conns));
}

TemporalGraph remove_time_edges(const TemporalGraph& g, const std::vector<TimeEdge>& removal) {
    for (const auto& e : removal)
        if (!g.has_edge(e))
            throw std::invalid_argument("remove_time_edges: " + to_string(e) + " not in graph");
    std::vector<TimeEdge> sorted_removal = removal;
    std::sort(sorted_removal.begin(), sorted_removal.end());
    std::vector<TimeEdge> kept;
    kept.reserve(g.edge_count());
    for (const auto& e : g.edges())
        if (!std::binary_search(sorted_removal.begin(), sorted_removal.end(), e))
            kept.push_back(e);
    return TemporalGraph(g.vertex_count(), g.lifetime(), std::move(kept));
}

TemporalGraph remove_connections(const TemporalGraph& g, const std::vector<Connection>& removal) {
    std::vector<Connection> sorted_removal = removal;
    std::sort(sorted_removal.begin(), sorted_removal.end());
    std::vector<TimeEdge> kept;
    kept.reserve(g.edge_count());
    for (const auto& e : g.edges())
        if (!std::binary_search(sorted_removal.begin(), sorted_removal.end(), e.conn))
            kept.push_back(e);
    return TemporalGraph(g.vertex_count(), g.lifetime(), std::move(kept));
}

bool is_simple(const TemporalGraph& g) {
    std::vector<Connection> conns;
    conns.reserve(g.edge_count());
    for (const auto& e : g.edges()) conns.push_back(e.conn);
    std::sort(conns.begin(), conns.end());
    return std::adjacent_find(conns.begin(), conns.end()) == conns.end();
}

}  // namespace tfes
