#ifndef TFES_IO_HPP
#define TFES_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tfes/core.hpp"
#include "tfes/reduce.hpp"
#include "tfes/solution.hpp"

namespace tfes {

struct ParseError : std::runtime_error {
    int line;

    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
};

// Instance grammar: optional `c ...` comment lines, one header
// `p tg <n> <m> <tau>`, then exactly m lines `e <u> <v> <t>` with
// 1 <= u < v <= n and 1 <= t <= tau. Duplicate edges are rejected.
TemporalGraph parse_instance(std::string_view text);

// Canonical form: header, then edges sorted by (t, u, v). Parses back to
// an equal graph.
std::string serialize_instance(const TemporalGraph& g);

// Static graph: `p sg <n> <m>` then m lines `e <u> <v>` with u < v.
StaticGraph parse_static_graph(std::string_view text);

// DAG with terminal pairs: `p dag <n> <m> <r>`, m arc lines `a <u> <v>`,
// r terminal lines `t <s> <t>`.
struct DagInstance {
    Dag dag;
    TerminalPairs pairs;
};
DagInstance parse_dag(std::string_view text);

// DIMACS CNF: `p cnf <vars> <clauses>`, clauses as 0-terminated literal
// runs (line breaks are insignificant).
CnfFormula parse_cnf(std::string_view text);

// Solution files: edge sets as `e <u> <v> <t>` lines, connection sets as
// `c <u> <v>` lines. Blank lines and a leading `min <k>` line (the solve
// output header) are ignored; in edge-set files `c ...` lines are
// comments.
std::vector<TimeEdge> parse_edge_solution(std::string_view text);
std::vector<Connection> parse_connection_solution(std::string_view text);

std::string serialize_solution(const Solution& s);

}  // namespace tfes

#endif
