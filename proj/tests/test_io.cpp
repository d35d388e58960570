#include <doctest.h>

#include "tfes/io.hpp"
#include "tfes/reduce.hpp"

using namespace tfes;

TEST_CASE("parse and serialize a labeled triangle") {
    const std::string text = "p tg 3 3 3\ne 1 2 1\ne 2 3 2\ne 1 3 3\n";
    const TemporalGraph g = parse_instance(text);
    CHECK(g.vertex_count() == 3);
    CHECK(g.lifetime() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(serialize_instance(g) == text);
}

TEST_CASE("edgeless instances and comments") {
    const TemporalGraph g = parse_instance("c empty\np tg 2 0 1\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 0);
    CHECK(serialize_instance(g) == "p tg 2 0 1\n");

    CHECK_NOTHROW(parse_instance("p tg 2 1 1\nc interleaved\ne 1 2 1\n"));
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_instance("p tg 3 1 3\ne 1 2 9\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }

    CHECK_THROWS_AS(parse_instance("p tg 3 2 3\ne 1 2 1\n"), ParseError);          // count short
    CHECK_THROWS_AS(parse_instance("p tg 3 1 3\ne 2 1 1\n"), ParseError);          // u >= v
    CHECK_THROWS_AS(parse_instance("p tg 3 2 3\ne 1 2 1\ne 1 2 1\n"), ParseError); // duplicate
    CHECK_THROWS_AS(parse_instance("e 1 2 1\n"), ParseError);                      // no header
    CHECK_THROWS_AS(parse_instance("p tg 3 0 3\nx\n"), ParseError);                // junk line
    CHECK_THROWS_AS(parse_instance(""), ParseError);
    CHECK_THROWS_AS(parse_instance("p tg 2 0 1\np tg 2 0 1\n"), ParseError);       // two headers
}

TEST_CASE("round trip on generated instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const TemporalGraph g = random_temporal_graph(5, 4, 0.4, seed);
        CHECK(parse_instance(serialize_instance(g)) == g);
    }
}

TEST_CASE("static graph format") {
    const StaticGraph g = parse_static_graph("p sg 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges().size() == 2);
    CHECK_THROWS_AS(parse_static_graph("p sg 3 1\ne 3 1\n"), ParseError);
}

TEST_CASE("dag format") {
    const DagInstance inst = parse_dag("c chain\np dag 3 2 1\na 1 2\na 2 3\nt 1 3\n");
    CHECK(inst.dag.num_vertices == 3);
    CHECK(inst.dag.arcs == std::vector<std::pair<VertexId, VertexId>>{{1, 2}, {2, 3}});
    CHECK(inst.pairs.pairs == std::vector<std::pair<VertexId, VertexId>>{{1, 3}});

    CHECK_THROWS_AS(parse_dag("p dag 3 1 0\na 1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_dag("p dag 3 2 0\na 1 2\n"), ParseError);
}

TEST_CASE("dimacs cnf") {
    const CnfFormula phi = parse_cnf("c demo\np cnf 3 2\n1 -2 3 0\n2\n-3 0\n");
    CHECK(phi.num_vars == 3);
    REQUIRE(phi.clauses.size() == 2);
    CHECK(phi.clauses[0] == std::vector<int>{1, -2, 3});
    CHECK(phi.clauses[1] == std::vector<int>{2, -3});

    CHECK_THROWS_AS(parse_cnf("p cnf 1 1\n1\n"), ParseError);         // unterminated
    CHECK_THROWS_AS(parse_cnf("p cnf 1 1\n2 0\n"), ParseError);       // out of range
    CHECK_THROWS_AS(parse_cnf("p cnf 1 1\n0\n"), ParseError);         // empty clause
    CHECK_THROWS_AS(parse_cnf("p cnf 2 1\n1 1 1 1 0\n"), ParseError); // too many literals
}

TEST_CASE("solution files") {
    const auto edges = parse_edge_solution("min 2\nc comment\ne 1 2 1\ne 2 3 4\n");
    CHECK(edges == std::vector<TimeEdge>{{1, 2, 1}, {2, 3, 4}});

    const auto conns = parse_connection_solution("min 1\nc 1 2\n");
    CHECK(conns == std::vector<Connection>{Connection(1, 2)});

    CHECK_THROWS_AS(parse_edge_solution("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_connection_solution("c 1\n"), ParseError);

    const Solution s{ProblemTarget::edge_set, {{2, 3, 4}, {1, 2, 1}}, {}};
    CHECK(serialize_solution(s) == "e 1 2 1\ne 2 3 4\n");
    const Solution c{ProblemTarget::connection_set, {}, {Connection(2, 3), Connection(1, 2)}};
    CHECK(serialize_solution(c) == "c 1 2\nc 2 3\n");
}
