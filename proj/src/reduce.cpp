#include "tfes/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "tfes/detail/combinations.hpp"

namespace tfes {

void validate_formula(const CnfFormula& phi) {
    if (phi.num_vars < 0) throw std::invalid_argument("formula: negative variable count");
    for (const auto& clause : phi.clauses) {
        if (clause.empty()) throw std::invalid_argument("formula: empty clause");
        if (clause.size() > 3)
            throw std::invalid_argument("formula: clause with more than 3 literals");
        for (int lit : clause) {
            const int var = std::abs(lit);
            if (var < 1 || var > phi.num_vars)
                throw std::invalid_argument("formula: literal " + std::to_string(lit) +
                                            " out of range");
        }
    }
}

CnfFormula pad_clauses(CnfFormula phi) {
    validate_formula(phi);
    for (auto& clause : phi.clauses)
        while (clause.size() < 3) clause.push_back(clause.back());
    return phi;
}

namespace {

void require_three_literals(const CnfFormula& phi) {
    validate_formula(phi);
    for (const auto& clause : phi.clauses)
        if (clause.size() != 3)
            throw std::invalid_argument(
                "gadget generator requires exactly 3 literals per clause (see pad_clauses)");
}

// Shared vertex layout of both SAT gadgets: s first, then one triple per
// variable, then one quadruple per clause.
struct SatLayout {
    int n, m;

    VertexId s() const { return 1; }
    VertexId var(int i) const { return 2 + 3 * (i - 1); }
    VertexId var_true(int i) const { return var(i) + 1; }
    VertexId var_false(int i) const { return var(i) + 2; }
    VertexId clause(int j) const { return 1 + 3 * n + 4 * (j - 1) + 1; }
    VertexId literal(int j, int z) const { return clause(j) + z; }
    VertexId after_clauses() const { return 1 + 3 * n + 4 * m + 1; }

    VertexId literal_target(int lit) const {
        return lit > 0 ? var_true(lit) : var_false(-lit);
    }

    std::map<VertexId, std::string> legend() const {
        std::map<VertexId, std::string> roles;
        roles[s()] = "s";
        for (int i = 1; i <= n; ++i) {
            roles[var(i)] = "x" + std::to_string(i);
            roles[var_true(i)] = "x" + std::to_string(i) + "_T";
            roles[var_false(i)] = "x" + std::to_string(i) + "_F";
        }
        for (int j = 1; j <= m; ++j) {
            roles[clause(j)] = "c" + std::to_string(j);
            for (int z = 1; z <= 3; ++z)
                roles[literal(j, z)] = "c" + std::to_string(j) + "_l" + std::to_string(z);
        }
        return roles;
    }
};

}  // namespace

ReductionOutput sat_to_strict(const CnfFormula& phi) {
    require_three_literals(phi);
    const SatLayout lay{phi.num_vars, static_cast<int>(phi.clauses.size())};

    std::vector<TimeEdge> edges;
    for (int i = 1; i <= lay.n; ++i) {
        edges.emplace_back(lay.var(i), lay.var_true(i), 2);
        edges.emplace_back(lay.var(i), lay.var_false(i), 3);
        edges.emplace_back(lay.var_true(i), lay.var_false(i), 1);
        edges.emplace_back(lay.s(), lay.var(i), 1);
    }
    for (int j = 1; j <= lay.m; ++j) {
        edges.emplace_back(lay.literal(j, 1), lay.literal(j, 2), 1);
        edges.emplace_back(lay.literal(j, 2), lay.literal(j, 3), 2);
        edges.emplace_back(lay.clause(j), lay.literal(j, 1), 7);
        edges.emplace_back(lay.clause(j), lay.literal(j, 2), 6);
        edges.emplace_back(lay.clause(j), lay.literal(j, 3), 5);
        edges.emplace_back(lay.s(), lay.clause(j), 8);
        for (int z = 1; z <= 3; ++z)
            edges.emplace_back(lay.literal(j, z), lay.literal_target(phi.clauses[j - 1][z - 1]),
                               4);
    }

    ReductionOutput out;
    out.graph = TemporalGraph(lay.after_clauses() - 1, 8, std::move(edges));
    out.k = lay.n + 2 * lay.m;
    out.vertex_legend = lay.legend();
    return out;
}

ReductionOutput sat_to_nonstrict(const CnfFormula& phi) {
    require_three_literals(phi);
    const SatLayout lay{phi.num_vars, static_cast<int>(phi.clauses.size())};
    const auto mid = [&](int j, int z) { return lay.after_clauses() - 1 + 3 * (j - 1) + z; };

    std::vector<TimeEdge> edges;
    for (int i = 1; i <= lay.n; ++i) {
        edges.emplace_back(lay.var_true(i), lay.var_false(i), 1);
        edges.emplace_back(lay.var(i), lay.var_true(i), 2);
        edges.emplace_back(lay.var(i), lay.var_false(i), 2);
        edges.emplace_back(lay.s(), lay.var(i), 1);
    }
    for (int j = 1; j <= lay.m; ++j) {
        edges.emplace_back(lay.literal(j, 1), lay.literal(j, 2), 1);
        edges.emplace_back(lay.literal(j, 2), lay.literal(j, 3), 1);
        edges.emplace_back(lay.s(), lay.clause(j), 3);
        for (int z = 1; z <= 3; ++z) {
            edges.emplace_back(lay.clause(j), lay.literal(j, z), 3);
            edges.emplace_back(lay.literal_target(phi.clauses[j - 1][z - 1]), mid(j, z), 2);
            edges.emplace_back(mid(j, z), lay.literal(j, z), 3);
        }
    }

    ReductionOutput out;
    out.graph = TemporalGraph(lay.after_clauses() - 1 + 3 * lay.m, 3, std::move(edges));
    out.k = lay.n + 2 * lay.m;
    out.vertex_legend = lay.legend();
    for (int j = 1; j <= lay.m; ++j)
        for (int z = 1; z <= 3; ++z)
            out.vertex_legend[mid(j, z)] =
                "c" + std::to_string(j) + "_l" + std::to_string(z) + "_mid";
    return out;
}

TemporalFragment heavy_time_edge(VertexId a, VertexId b, TimeLabel t, int k, TimeLabel tau,
                                 VertexId first_fresh) {
    if (a == b) throw std::invalid_argument("heavy_time_edge: endpoints must differ");
    if (k < 0) throw std::invalid_argument("heavy_time_edge: negative budget");
    if (t < 1 || t + 2 > tau)
        throw std::out_of_range("heavy_time_edge: labels " + std::to_string(t) + ".." +
                                std::to_string(t + 2) + " do not fit lifetime " +
                                std::to_string(tau));
    TemporalFragment frag;
    for (int i = 0; i <= k; ++i) {
        const VertexId mid_a = first_fresh + 2 * i;
        const VertexId mid_b = mid_a + 1;
        frag.new_vertices.push_back(mid_a);
        frag.new_vertices.push_back(mid_b);
        frag.edges.emplace_back(a, mid_a, t);
        frag.edges.emplace_back(mid_a, mid_b, t + 1);
        frag.edges.emplace_back(mid_b, b, t + 2);
    }
    return frag;
}

std::vector<int> acyclic_ordering(const Dag& dag) {
    const int n = dag.num_vertices;
    std::vector<std::vector<int>> out(n + 1);
    std::vector<int> indegree(n + 1, 0);
    for (const auto& [u, v] : dag.arcs) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::out_of_range("acyclic_ordering: arc endpoint out of range");
        if (u == v) throw std::invalid_argument("acyclic_ordering: self-loop is a cycle");
        out[u].push_back(v);
        ++indegree[v];
    }
    std::vector<int> pos(n + 1, 0);
    std::set<int> sources;
    for (int v = 1; v <= n; ++v)
        if (indegree[v] == 0) sources.insert(v);
    int next_pos = 1;
    while (!sources.empty()) {
        const int v = *sources.begin();
        sources.erase(sources.begin());
        pos[v] = next_pos++;
        for (int w : out[v])
            if (--indegree[w] == 0) sources.insert(w);
    }
    if (next_pos != n + 1) throw std::invalid_argument("acyclic_ordering: input is not a DAG");
    return pos;
}

bool check_multicut_preconditions(const Dag& dag, const TerminalPairs& pairs) {
    std::set<VertexId> terminals, sources, sinks;
    for (const auto& [s, t] : pairs.pairs) {
        if (s < 1 || s > dag.num_vertices || t < 1 || t > dag.num_vertices) return false;
        if (!terminals.insert(s).second) return false;
        if (!terminals.insert(t).second) return false;
        sources.insert(s);
        sinks.insert(t);
    }
    for (const auto& [u, v] : dag.arcs) {
        if (sources.count(v)) return false;  // arc into a source terminal
        if (sinks.count(u)) return false;    // arc out of a sink terminal
    }
    return true;
}

ReductionOutput multicut_dag_to_tfes(const Dag& dag, const TerminalPairs& pairs, int k) {
    if (k < 0) throw std::invalid_argument("multicut_dag_to_tfes: negative budget");
    {
        std::set<std::pair<VertexId, VertexId>> seen(dag.arcs.begin(), dag.arcs.end());
        if (seen.size() != dag.arcs.size())
            throw std::invalid_argument("multicut_dag_to_tfes: duplicate arc");
    }
    if (!check_multicut_preconditions(dag, pairs))
        throw std::invalid_argument(
            "multicut_dag_to_tfes: instance violates the terminal preconditions");

    const auto pos = acyclic_ordering(dag);
    const int n = dag.num_vertices;
    const TimeLabel tau = 4 * (n + 1) + 2;

    std::set<VertexId> terminals;
    for (const auto& [s, t] : pairs.pairs) {
        terminals.insert(s);
        terminals.insert(t);
    }

    ReductionOutput out;
    out.k = k;

    // terminals keep one vertex, nonterminals split into in/out
    std::vector<VertexId> in_id(n + 1, 0), out_id(n + 1, 0);
    VertexId next_id = 1;
    for (int v = 1; v <= n; ++v) {
        if (terminals.count(v)) {
            in_id[v] = out_id[v] = next_id;
            out.vertex_legend[next_id++] = "v" + std::to_string(v);
        } else {
            in_id[v] = next_id;
            out.vertex_legend[next_id++] = "v" + std::to_string(v) + "_in";
            out_id[v] = next_id;
            out.vertex_legend[next_id++] = "v" + std::to_string(v) + "_out";
        }
    }

    std::vector<TimeEdge> edges;
    auto splice = [&](VertexId a, VertexId b, TimeLabel t, const std::string& role) {
        TemporalFragment frag = heavy_time_edge(a, b, t, k, tau, next_id);
        edges.insert(edges.end(), frag.edges.begin(), frag.edges.end());
        for (std::size_t i = 0; i < frag.new_vertices.size(); ++i)
            out.vertex_legend[frag.new_vertices[i]] =
                role + "_p" + std::to_string(i / 2 + 1) + (i % 2 == 0 ? "a" : "b");
        next_id += static_cast<VertexId>(frag.new_vertices.size());
    };

    for (const auto& [u, w] : dag.arcs)
        splice(out_id[u], in_id[w], 4 * pos[u] + 1, "hte_" + std::to_string(u) + "_" +
                                                        std::to_string(w));
    for (int v = 1; v <= n; ++v)
        if (!terminals.count(v)) edges.emplace_back(in_id[v], out_id[v], 4 * pos[v]);
    for (const auto& [s, t] : pairs.pairs)
        splice(in_id[t], in_id[s], 4 * (n + 1), "bte_" + std::to_string(t) + "_" +
                                                    std::to_string(s));

    out.graph = TemporalGraph(next_id - 1, tau, std::move(edges));
    return out;
}

TemporalGraph static_to_three_layers(const StaticGraph& g) {
    std::vector<TimeEdge> edges;
    edges.reserve(g.edges().size() * 3);
    for (const auto& c : g.edges())
        for (TimeLabel t = 1; t <= 3; ++t) edges.emplace_back(c, t);
    return TemporalGraph(g.vertex_count(), 3, std::move(edges));
}

bool sat_bruteforce(const CnfFormula& phi) {
    validate_formula(phi);
    if (phi.num_vars > 20)
        throw ResourceLimitError("sat_bruteforce: more than 20 variables");
    const std::uint32_t assignments = 1u << phi.num_vars;
    for (std::uint32_t a = 0; a < assignments; ++a) {
        bool ok = true;
        for (const auto& clause : phi.clauses) {
            bool sat = false;
            for (int lit : clause) {
                const bool value = a >> (std::abs(lit) - 1) & 1;
                if (lit > 0 ? value : !value) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool multicut_dag_bruteforce(const Dag& dag, const TerminalPairs& pairs, int k) {
    const int n = dag.num_vertices;
    if (n > 15) throw ResourceLimitError("multicut_dag_bruteforce: more than 15 vertices");
    if (k < 0) throw std::invalid_argument("multicut_dag_bruteforce: negative budget");

    std::set<VertexId> terminals;
    for (const auto& [s, t] : pairs.pairs) {
        terminals.insert(s);
        terminals.insert(t);
    }
    std::vector<VertexId> nonterminals;
    for (int v = 1; v <= n; ++v)
        if (!terminals.count(v)) nonterminals.push_back(v);

    std::vector<std::vector<int>> out(n + 1);
    for (const auto& [u, v] : dag.arcs) out[u].push_back(v);

    auto cut_works = [&](const std::vector<char>& removed) {
        for (const auto& [s, t] : pairs.pairs) {
            if (removed[s] || removed[t]) continue;  // cannot happen, terminals are kept
            std::vector<char> seen(n + 1, 0);
            std::vector<int> stack{s};
            seen[s] = 1;
            bool reached = false;
            while (!stack.empty() && !reached) {
                const int v = stack.back();
                stack.pop_back();
                for (int w : out[v]) {
                    if (removed[w] || seen[w]) continue;
                    if (w == t) {
                        reached = true;
                        break;
                    }
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
            if (reached) return false;
        }
        return true;
    };

    const std::size_t limit = std::min<std::size_t>(k, nonterminals.size());
    for (std::size_t c = 0; c <= limit; ++c) {
        auto pick = detail::first_combination(c);
        do {
            std::vector<char> removed(n + 1, 0);
            for (auto idx : pick) removed[nonterminals[idx]] = 1;
            if (cut_works(removed)) return true;
        } while (detail::next_combination(pick, nonterminals.size()));
    }
    return false;
}

TemporalGraph random_temporal_graph(int n, TimeLabel tau, double edge_probability,
                                    std::uint64_t seed) {
    if (n < 0 || tau < 0) throw std::invalid_argument("random_temporal_graph: negative size");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw std::invalid_argument("random_temporal_graph: probability outside [0,1]");

    // compare 53 fresh bits against a fixed-point threshold; this stays
    // bit-identical across platforms, unlike the distribution adapters
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(std::llround(std::ldexp(edge_probability, 53)));
    std::mt19937_64 rng(seed);

    std::vector<TimeEdge> edges;
    for (TimeLabel t = 1; t <= tau; ++t)
        for (VertexId u = 1; u <= n; ++u)
            for (VertexId v = u + 1; v <= n; ++v)
                if ((rng() >> 11) < threshold) edges.emplace_back(u, v, t);
    return TemporalGraph(n, tau, std::move(edges));
}

}  // namespace tfes
