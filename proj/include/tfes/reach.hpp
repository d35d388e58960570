#ifndef TFES_REACH_HPP
#define TFES_REACH_HPP

#include <optional>
#include <vector>

#include "tfes/core.hpp"

namespace tfes {

// Strict paths require strictly increasing labels on consecutive steps,
// non-strict paths only non-decreasing ones.
enum class PathModel { strict, non_strict };

// One traversal step: `edge` crossed from `from` into `to`.
struct WalkStep {
    TimeEdge edge;
    VertexId from = 0;
    VertexId to = 0;

    friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

// An oriented sequence of time-edges. As produced by this module it is
// either a temporal path (all visited vertices distinct) or a temporal
// cycle (source() == target(), length >= 3, inner vertices distinct).
struct TemporalWalk {
    std::vector<WalkStep> steps;

    std::size_t length() const { return steps.size(); }
    VertexId source() const { return steps.front().from; }
    VertexId target() const { return steps.back().to; }
    bool is_closed() const { return !steps.empty() && source() == target(); }
};

// A temporal path from src to dst with the minimum number of steps among
// all paths whose first label is >= earliest_start and that avoid every
// time-edge on the `forbidden` connection. Absent if no such path exists.
std::optional<TemporalWalk> min_hop_path(const TemporalGraph& g, VertexId src, VertexId dst,
                                         TimeLabel earliest_start, PathModel model,
                                         std::optional<Connection> forbidden = std::nullopt);

// A temporal cycle with the minimum number of time-edges, or absent if g
// is cycle-free. Every cycle is found by treating each time-edge, in
// canonical (t, u, v) order and in both orientations, as the
// minimum-label first edge and searching for a closing path that avoids
// the anchor's connection; the anchor order fixes tie-breaking.
std::optional<TemporalWalk> shortest_cycle(const TemporalGraph& g, PathModel model);

bool has_cycle(const TemporalGraph& g, PathModel model);

// True iff removing `sol` leaves g free of temporal cycles under `model`.
// Every element of `sol` must be an edge of g.
bool verify_feedback_edge_set(const TemporalGraph& g, const std::vector<TimeEdge>& sol,
                              PathModel model);

// Connection-set analogue; every element must be an underlying edge of g.
bool verify_feedback_connection_set(const TemporalGraph& g, const std::vector<Connection>& sol,
                                    PathModel model);

// Square boolean matrix with 1-based indexing.
class ReachabilityMatrix {
public:
    explicit ReachabilityMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {}

    int dim() const { return n_; }
    bool at(int i, int j) const { return cells_[index(i, j)] != 0; }
    void set(int i, int j, bool value) { cells_[index(i, j)] = value ? 1 : 0; }

    friend bool operator==(const ReachabilityMatrix&, const ReachabilityMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw std::out_of_range("reachability matrix index");
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    int n_ = 0;
    std::vector<uint8_t> cells_;
};

// Entry (i, j), i != j: a temporal path from v_i to v_j exists among the
// first t layers. Entry (i, i): a temporal cycle starting and ending at
// v_i exists there.
ReachabilityMatrix reachability_matrix(const TemporalGraph& g, TimeLabel t, PathModel model);

}  // namespace tfes

#endif
