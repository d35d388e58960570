#ifndef TFES_REDUCE_HPP
#define TFES_REDUCE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tfes/core.hpp"

namespace tfes {

// CNF formula with at most three literals per clause; literals are
// signed 1-based variable indices.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

// Throws std::invalid_argument unless every clause has 1..3 literals
// with indices in range.
void validate_formula(const CnfFormula& phi);

// Pads clauses with fewer than three literals by repeating the last
// literal; the gadget generators require exactly three.
CnfFormula pad_clauses(CnfFormula phi);

struct Dag {
    int num_vertices = 0;
    std::vector<std::pair<VertexId, VertexId>> arcs;
};

struct TerminalPairs {
    std::vector<std::pair<VertexId, VertexId>> pairs;
};

// A generated hardness instance: the temporal graph, the budget that
// makes the reduction an equivalence, and the role of every vertex.
struct ReductionOutput {
    TemporalGraph graph;
    int k = 0;
    std::map<VertexId, std::string> vertex_legend;
};

// 3-SAT to STFES/STFCS: one triangle gadget per variable, a five-edge
// gadget per clause, label-4 connector edges per literal occurrence, and
// a star vertex s closing one cycle per (clause, literal). Lifetime 8,
// budget n + 2m, simple output. Requires exactly-3-literal clauses.
ReductionOutput sat_to_strict(const CnfFormula& phi);

// 3-SAT to TFES/TFCS: same gadget skeleton compressed to three labels,
// with every variable-to-clause connector subdivided by a fresh middle
// vertex. Lifetime 3, budget n + 2m.
ReductionOutput sat_to_nonstrict(const CnfFormula& phi);

// A bundle of fresh vertices and edges to splice into a larger instance.
struct TemporalFragment {
    std::vector<TimeEdge> edges;
    std::vector<VertexId> new_vertices;
};

// k+1 parallel three-edge paths from a to b with labels t, t+1, t+2:
// traversable a -> b only, and not disconnectable within budget k. Fresh
// vertices are numbered consecutively from first_fresh. Throws a range
// error when t+2 exceeds tau.
TemporalFragment heavy_time_edge(VertexId a, VertexId b, TimeLabel t, int k, TimeLabel tau,
                                 VertexId first_fresh);

// Positions of a deterministic acyclic ordering (smallest-index source
// first), as a 1-based map pos[v] in [1, |V|]. Throws on directed cycles.
std::vector<int> acyclic_ordering(const Dag& dag);

// Multicut-in-DAGs to (S)TFES/(S)TFCS: arcs become heavy time-edges laid
// out along an acyclic ordering, nonterminals split into an in/out pair
// joined by a single deletable edge, and one heavy back-edge per
// terminal pair closes the cycles. Requires check_multicut_preconditions.
ReductionOutput multicut_dag_to_tfes(const Dag& dag, const TerminalPairs& pairs, int k);

// Every edge of g present at labels 1, 2, 3.
TemporalGraph static_to_three_layers(const StaticGraph& g);

// Satisfiability by full assignment enumeration; at most 20 variables.
bool sat_bruteforce(const CnfFormula& phi);

// True iff at most k nonterminal vertex deletions break every s_i -> t_i
// reachability; at most 15 vertices.
bool multicut_dag_bruteforce(const Dag& dag, const TerminalPairs& pairs, int k);

// Terminals pairwise distinct, no arc into any source, none out of any
// sink.
bool check_multicut_preconditions(const Dag& dag, const TerminalPairs& pairs);

// Each (pair, label) slot included independently with the given
// probability; identical seeds give bit-identical graphs.
TemporalGraph random_temporal_graph(int n, TimeLabel tau, double edge_probability,
                                    std::uint64_t seed);

}  // namespace tfes

#endif
