#include "tfes/solve_dp.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <numeric>

#include "tfes/detail/combinations.hpp"

namespace tfes {

namespace {

void check_dims(const StaticGraph& layer, const ConnectivityMatrix& before,
                const ConnectivityMatrix& after) {
    if (layer.vertex_count() != before.dim() || before.dim() != after.dim())
        throw std::invalid_argument("layer/matrix dimension mismatch");
}

bool incompatible(const ConnectivityMatrix& before, const ConnectivityMatrix& after) {
    // some entry is ANY before but demanded ZERO after
    return (before.bits() & ~after.bits()) != 0;
}

// The shared generator condition of both deletion counters, evaluated
// for the ordered reading (k, j) of an edge endpoint pair.
bool endpoint_generates(int k, int j, const ConnectivityMatrix& before,
                        const ConnectivityMatrix& after) {
    for (int i = 1; i <= after.dim(); ++i)
        if (after.zero(i, j) && (i == k || before.any(i, k))) return true;
    return false;
}

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// True iff x lies on a cycle of the (simple, static) graph given by
// `edges`: two distinct neighbors of x connected after removing x.
bool on_cycle(int x, int n, const std::vector<Connection>& edges) {
    Dsu dsu(n);
    std::vector<int> neighbors;
    for (const auto& e : edges) {
        if (e.u == x)
            neighbors.push_back(e.v);
        else if (e.v == x)
            neighbors.push_back(e.u);
        else
            dsu.unite(e.u, e.v);
    }
    for (std::size_t a = 0; a < neighbors.size(); ++a)
        for (std::size_t b = a + 1; b < neighbors.size(); ++b)
            if (dsu.find(neighbors[a]) == dsu.find(neighbors[b])) return true;
    return false;
}

}  // namespace

ConnectivityMatrix target_matrix(int n) {
    ConnectivityMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) m.set_any(i, j);
    return m;
}

LayerDeletions srd(const StaticGraph& layer, const ConnectivityMatrix& before,
                   const ConnectivityMatrix& after) {
    check_dims(layer, before, after);
    if (incompatible(before, after)) return {};
    LayerDeletions result;
    result.feasible = true;
    for (const Connection& e : layer.edges()) {
        if (endpoint_generates(e.u, e.v, before, after) ||
            endpoint_generates(e.v, e.u, before, after))
            result.edges.push_back(e);
    }
    return result;
}

LayerDeletions nrd(const StaticGraph& layer, const ConnectivityMatrix& before,
                   const ConnectivityMatrix& after) {
    check_dims(layer, before, after);
    if (incompatible(before, after)) return {};

    const int n = layer.vertex_count();
    // terminal pairs (v_k, v_j); unordered for k != j (the cut condition
    // is symmetric), diagonal pairs kept separately
    std::vector<Connection> pairs;
    std::vector<int> diagonal;
    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j <= n; ++j) {
            if (!endpoint_generates(k, j, before, after)) continue;
            if (k == j)
                diagonal.push_back(k);
            else
                pairs.push_back(Connection(k, j));
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    const auto& all = layer.edges();
    auto cut_works = [&](const std::vector<Connection>& kept) {
        Dsu dsu(n);
        for (const auto& e : kept) dsu.unite(e.u, e.v);
        for (const auto& p : pairs)
            if (dsu.find(p.u) == dsu.find(p.v)) return false;
        for (int x : diagonal)
            if (on_cycle(x, n, kept)) return false;
        return true;
    };

    for (std::size_t c = 0; c <= all.size(); ++c) {
        auto pick = detail::first_combination(c);
        do {
            std::vector<Connection> cut, kept;
            cut.reserve(c);
            std::size_t next = 0;
            for (std::size_t idx = 0; idx < all.size(); ++idx) {
                if (next < c && pick[next] == idx) {
                    cut.push_back(all[idx]);
                    ++next;
                } else {
                    kept.push_back(all[idx]);
                }
            }
            if (cut_works(kept)) return LayerDeletions{true, std::move(cut)};
        } while (detail::next_combination(pick, all.size()));
    }
    // deleting the whole layer satisfies any terminal set
    assert(false && "full layer cut must be feasible");
    return LayerDeletions{true, all};
}

namespace {

struct ChainNode {
    std::vector<TimeEdge> deleted;
    std::shared_ptr<const ChainNode> prev;
};

struct StateEntry {
    long long cost = 0;
    std::shared_ptr<const ChainNode> chain;
};

}  // namespace

DpOutcome dp_solve_target(const TemporalGraph& g, PathModel model,
                          const ConnectivityMatrix& target) {
    const int n = g.vertex_count();
    if (target.dim() != n)
        throw std::invalid_argument("dp_solve_target: matrix dimension mismatch");

    // T(A, 0) = 0 for every A, and both counters grow with the
    // predecessor's ANY-set, so the all-ZERO matrix dominates every
    // other start state.
    std::map<std::uint64_t, StateEntry> column;
    column.emplace(0, StateEntry{});

    for (TimeLabel t = 1; t <= g.lifetime(); ++t) {
        const StaticGraph lay = layer(g, t);
        const bool final_layer = t == g.lifetime();
        std::map<std::uint64_t, StateEntry> next_column;

        for (const auto& [before_bits, entry] : column) {
            const auto before = ConnectivityMatrix::from_bits(n, before_bits);
            auto relax = [&](std::uint64_t after_bits) {
                const auto after = ConnectivityMatrix::from_bits(n, after_bits);
                LayerDeletions del = model == PathModel::strict ? srd(lay, before, after)
                                                                : nrd(lay, before, after);
                if (!del.feasible) return;
                assert((before_bits & ~after_bits) == 0);
                const long long cost = entry.cost + static_cast<long long>(del.count());
                auto it = next_column.find(after_bits);
                if (it != next_column.end() && it->second.cost <= cost) return;
                auto node = std::make_shared<ChainNode>();
                node->deleted.reserve(del.count());
                for (const auto& c : del.edges) node->deleted.emplace_back(c, t);
                node->prev = entry.chain;
                next_column.insert_or_assign(it, after_bits, StateEntry{cost, std::move(node)});
            };

            if (final_layer) {
                // only the queried state matters in the last column
                relax(target.bits());
            } else {
                // feasible successors are exactly the supersets of the
                // state's ANY-set within the target's
                const std::uint64_t free_mask = target.bits() & ~before_bits;
                std::uint64_t sub = 0;
                do {
                    relax(before_bits | sub);
                    sub = (sub - free_mask) & free_mask;
                } while (sub != 0);
            }
        }
        column = std::move(next_column);
    }

    DpOutcome out;
    if (g.lifetime() == 0) return out;  // T(A, 0) = 0, nothing to delete

    const StateEntry& final_entry = column.at(target.bits());
    out.minimum = static_cast<int>(final_entry.cost);
    for (auto node = final_entry.chain; node; node = node->prev)
        out.witness.insert(out.witness.end(), node->deleted.begin(), node->deleted.end());
    std::sort(out.witness.begin(), out.witness.end());
    assert(out.witness.size() == static_cast<std::size_t>(out.minimum));
    return out;
}

DpOutcome dp_solve(const TemporalGraph& g, PathModel model) {
    return dp_solve_target(g, model, target_matrix(g.vertex_count()));
}

bool dp_decide(const TemporalGraph& g, int k, PathModel model) {
    return dp_solve(g, model).minimum <= k;
}

}  // namespace tfes
