#ifndef TFES_CORE_HPP
#define TFES_CORE_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace tfes {

// Vertices are dense 1-based indices, time-labels live in [1, tau].
using VertexId = int;
using TimeLabel = int;

// Thrown when a brute-force routine is asked to enumerate beyond its
// hard instance-size guard.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unordered vertex pair, stored normalized (u < v).
struct Connection {
    VertexId u = 0;
    VertexId v = 0;

    Connection() = default;
    Connection(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("connection endpoints must differ");
    }

    friend auto operator<=>(const Connection&, const Connection&) = default;
};

// A connection present at one specific time-label.
struct TimeEdge {
    Connection conn;
    TimeLabel t = 0;

    TimeEdge() = default;
    TimeEdge(Connection c, TimeLabel label) : conn(c), t(label) {}
    TimeEdge(VertexId a, VertexId b, TimeLabel label) : conn(a, b), t(label) {}

    // Canonical order everywhere: (t, u, v).
    friend auto operator<=>(const TimeEdge& a, const TimeEdge& b) {
        return std::tie(a.t, a.conn) <=> std::tie(b.t, b.conn);
    }
    friend bool operator==(const TimeEdge&, const TimeEdge&) = default;
};

std::string to_string(const Connection& c);
std::string to_string(const TimeEdge& e);

// Static (label-free) graph on vertices 1..n. Edge list is sorted and
// duplicate-free after construction.
class StaticGraph {
public:
    StaticGraph() = default;
    StaticGraph(int n, std::vector<Connection> edges);

    int vertex_count() const { return n_; }
    const std::vector<Connection>& edges() const { return edges_; }
    bool has_edge(const Connection& c) const;

    friend bool operator==(const StaticGraph&, const StaticGraph&) = default;

private:
    int n_ = 0;
    std::vector<Connection> edges_;
};

// Temporal graph: fixed vertex set 1..n, time-edges with labels in
// [1, tau]. Values are immutable after construction; all operations
// below return new graphs. Parallel time-edges on one vertex pair are
// allowed (see is_simple).
class TemporalGraph {
public:
    TemporalGraph() = default;
    TemporalGraph(int n, TimeLabel tau, std::vector<TimeEdge> edges);

    int vertex_count() const { return n_; }
    TimeLabel lifetime() const { return tau_; }
    const std::vector<TimeEdge>& edges() const { return edges_; }  // sorted by (t, u, v)
    std::size_t edge_count() const { return edges_.size(); }
    bool has_edge(const TimeEdge& e) const;

    friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;

private:
    int n_ = 0;
    TimeLabel tau_ = 0;
    std::vector<TimeEdge> edges_;
};

// Layer t: the static graph of all edges labeled exactly t.
StaticGraph layer(const TemporalGraph& g, TimeLabel t);

// The temporal subgraph of the first t layers, with lifetime t.
TemporalGraph prefix(const TemporalGraph& g, TimeLabel t);

// The underlying static graph (labels dropped, multi-edges collapsed).
StaticGraph underlying(const TemporalGraph& g);

// Removes the given time-edges. Every element must be present in g.
TemporalGraph remove_time_edges(const TemporalGraph& g, const std::vector<TimeEdge>& removal);

// Removes every time-edge whose vertex pair occurs in `removal`.
// Absent connections are ignored.
TemporalGraph remove_connections(const TemporalGraph& g, const std::vector<Connection>& removal);

// True iff every vertex pair carries at most one time-edge.
bool is_simple(const TemporalGraph& g);

}  // namespace tfes

#endif
