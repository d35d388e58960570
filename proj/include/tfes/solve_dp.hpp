#ifndef TFES_SOLVE_DP_HPP
#define TFES_SOLVE_DP_HPP

#include <cstdint>
#include <vector>

#include "tfes/core.hpp"
#include "tfes/reach.hpp"

namespace tfes {

// n x n grid over {ZERO, ANY}, packed into a 64-bit word (bit set =
// ANY), so at most 8 vertices. A ZERO at (i, j) demands that no temporal
// path from v_i to v_j exists — no temporal cycle through v_i when
// i == j. ANY entries are unconstrained.
class ConnectivityMatrix {
public:
    static constexpr int kMaxDim = 8;

    explicit ConnectivityMatrix(int n = 0) : n_(check_dim(n)) {}

    static ConnectivityMatrix from_bits(int n, std::uint64_t bits) {
        ConnectivityMatrix m(n);
        m.bits_ = bits;
        return m;
    }

    int dim() const { return n_; }
    std::uint64_t bits() const { return bits_; }

    bool any(int i, int j) const { return bits_ >> index(i, j) & 1; }
    bool zero(int i, int j) const { return !any(i, j); }

    void set_any(int i, int j, bool value = true) {
        if (value)
            bits_ |= std::uint64_t{1} << index(i, j);
        else
            bits_ &= ~(std::uint64_t{1} << index(i, j));
    }

    friend bool operator==(const ConnectivityMatrix&, const ConnectivityMatrix&) = default;

private:
    static int check_dim(int n) {
        if (n < 0 || n > kMaxDim)
            throw std::invalid_argument("connectivity matrix: dimension outside [0," +
                                        std::to_string(kMaxDim) + "]");
        return n;
    }

    unsigned index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw std::out_of_range("connectivity matrix index");
        return static_cast<unsigned>(i - 1) * n_ + (j - 1);
    }

    int n_ = 0;
    std::uint64_t bits_ = 0;
};

// Diagonal ZERO, off-diagonal ANY: the cheapest specification that
// forbids every temporal cycle.
ConnectivityMatrix target_matrix(int n);

// Per-layer deletion answer. `feasible == false` encodes the infinite
// cost (the before/after matrices are incompatible); otherwise the cost
// is edges.size() and `edges` is the exact set to delete in this layer.
struct LayerDeletions {
    bool feasible = false;
    std::vector<Connection> edges;

    std::size_t count() const { return edges.size(); }
};

// Strict required deletions: infeasible iff some entry is ANY before but
// ZERO after; otherwise collects every layer edge {v_k, v_j} such that
// some i has after(i,j) = ZERO and (before(i,k) = ANY or i = k).
LayerDeletions srd(const StaticGraph& layer, const ConnectivityMatrix& before,
                   const ConnectivityMatrix& after);

// Non-strict counterpart: same infeasibility clause; otherwise a minimum
// multicut of the layer separating every generated terminal pair
// (v_k, v_j), where a diagonal pair (v_x, v_x) demands that v_x lies on
// no cycle of the remaining layer. Computed by exhaustive enumeration in
// (cardinality, lexicographic) order, so the result is deterministic.
LayerDeletions nrd(const StaticGraph& layer, const ConnectivityMatrix& before,
                   const ConnectivityMatrix& after);

struct DpOutcome {
    int minimum = 0;
    std::vector<TimeEdge> witness;
};

// Dynamic program over connectivity states: column t maps each matrix A
// to the minimum number of deletions among the first t layers that
// enforce A, via T(A, t) = min_B T(B, t-1) + srd/nrd(layer t, B, A) with
// T(., 0) = 0. Only states whose ANY-set is contained in the target's
// are ever useful (feasible transitions never shrink ANY-sets), which
// prunes the state space. Two cost columns are live at a time; witness
// edges ride along as shared per-layer chains.
DpOutcome dp_solve_target(const TemporalGraph& g, PathModel model,
                          const ConnectivityMatrix& target);

// Minimum feedback edge set size T(A*, tau) with witness. Exact for
// simple temporal graphs; on inputs with parallel time-edges the
// connectivity semantics also forbids two-edge round trips, which are
// not temporal cycles, so the result can exceed the true optimum there.
DpOutcome dp_solve(const TemporalGraph& g, PathModel model);

bool dp_decide(const TemporalGraph& g, int k, PathModel model);

}  // namespace tfes

#endif
