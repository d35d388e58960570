#include "tfes/io.hpp"

#include <algorithm>
#include <sstream>

namespace tfes {

namespace {

// Lines split on '\n'; a trailing newline does not produce a last line.
struct LineReader {
    std::vector<std::pair<int, std::string>> lines;  // (line number, content)

    explicit LineReader(std::string_view text) {
        int number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t nl = text.find('\n', pos);
            const std::string_view raw =
                text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
            ++number;
            std::string line(raw);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.emplace_back(number, std::move(line));
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
    }
};

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    return value;
}

}  // namespace

TemporalGraph parse_instance(std::string_view text) {
    LineReader reader(text);
    int n = -1, m = -1, tau = -1;
    std::vector<TimeEdge> edges;
    int last_line = 0;

    for (const auto& [number, line] : reader.lines) {
        last_line = number;
        if (blank(line)) continue;
        const auto toks = tokens(line);
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(number, "duplicate header");
            if (toks.size() != 5 || toks[1] != "tg")
                throw ParseError(number, "expected 'p tg <n> <m> <tau>'");
            n = parse_int(toks[2], number);
            m = parse_int(toks[3], number);
            tau = parse_int(toks[4], number);
            if (n < 0 || m < 0 || tau < 0) throw ParseError(number, "negative header field");
            continue;
        }
        if (toks[0] == "e") {
            if (n < 0) throw ParseError(number, "edge before header");
            if (toks.size() != 4) throw ParseError(number, "expected 'e <u> <v> <t>'");
            const int u = parse_int(toks[1], number);
            const int v = parse_int(toks[2], number);
            const int t = parse_int(toks[3], number);
            if (!(1 <= u && u < v && v <= n))
                throw ParseError(number, "edge endpoints must satisfy 1 <= u < v <= n");
            if (t < 1 || t > tau) throw ParseError(number, "label outside [1, tau]");
            const TimeEdge e(u, v, t);
            if (std::find(edges.begin(), edges.end(), e) != edges.end())
                throw ParseError(number, "duplicate edge " + to_string(e));
            edges.push_back(e);
            continue;
        }
        throw ParseError(number, "unrecognized line '" + line + "'");
    }
    if (n < 0) throw ParseError(last_line, "missing 'p tg' header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(last_line, "header declares " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
    return TemporalGraph(n, tau, std::move(edges));
}

std::string serialize_instance(const TemporalGraph& g) {
    std::ostringstream out;
    out << "p tg " << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.lifetime() << '\n';
    for (const auto& e : g.edges())  // already in canonical (t, u, v) order
        out << "e " << e.conn.u << ' ' << e.conn.v << ' ' << e.t << '\n';
    return out.str();
}

StaticGraph parse_static_graph(std::string_view text) {
    LineReader reader(text);
    int n = -1, m = -1;
    std::vector<Connection> edges;
    int last_line = 0;

    for (const auto& [number, line] : reader.lines) {
        last_line = number;
        if (blank(line)) continue;
        const auto toks = tokens(line);
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(number, "duplicate header");
            if (toks.size() != 4 || toks[1] != "sg")
                throw ParseError(number, "expected 'p sg <n> <m>'");
            n = parse_int(toks[2], number);
            m = parse_int(toks[3], number);
            if (n < 0 || m < 0) throw ParseError(number, "negative header field");
            continue;
        }
        if (toks[0] == "e") {
            if (n < 0) throw ParseError(number, "edge before header");
            if (toks.size() != 3) throw ParseError(number, "expected 'e <u> <v>'");
            const int u = parse_int(toks[1], number);
            const int v = parse_int(toks[2], number);
            if (!(1 <= u && u < v && v <= n))
                throw ParseError(number, "edge endpoints must satisfy 1 <= u < v <= n");
            const Connection c(u, v);
            if (std::find(edges.begin(), edges.end(), c) != edges.end())
                throw ParseError(number, "duplicate edge " + to_string(c));
            edges.push_back(c);
            continue;
        }
        throw ParseError(number, "unrecognized line '" + line + "'");
    }
    if (n < 0) throw ParseError(last_line, "missing 'p sg' header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(last_line, "header declares " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
    return StaticGraph(n, std::move(edges));
}

DagInstance parse_dag(std::string_view text) {
    LineReader reader(text);
    int n = -1, m = -1, r = -1;
    DagInstance inst;
    int last_line = 0;

    for (const auto& [number, line] : reader.lines) {
        last_line = number;
        if (blank(line)) continue;
        const auto toks = tokens(line);
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(number, "duplicate header");
            if (toks.size() != 5 || toks[1] != "dag")
                throw ParseError(number, "expected 'p dag <n> <m> <r>'");
            n = parse_int(toks[2], number);
            m = parse_int(toks[3], number);
            r = parse_int(toks[4], number);
            if (n < 0 || m < 0 || r < 0) throw ParseError(number, "negative header field");
            inst.dag.num_vertices = n;
            continue;
        }
        if (toks[0] == "a" || toks[0] == "t") {
            if (n < 0) throw ParseError(number, "body line before header");
            if (toks.size() != 3)
                throw ParseError(number, "expected '" + toks[0] + " <u> <v>'");
            const int u = parse_int(toks[1], number);
            const int v = parse_int(toks[2], number);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(number, "vertex outside [1, n]");
            if (toks[0] == "a")
                inst.dag.arcs.emplace_back(u, v);
            else
                inst.pairs.pairs.emplace_back(u, v);
            continue;
        }
        throw ParseError(number, "unrecognized line '" + line + "'");
    }
    if (n < 0) throw ParseError(last_line, "missing 'p dag' header");
    if (static_cast<int>(inst.dag.arcs.size()) != m)
        throw ParseError(last_line, "header declares " + std::to_string(m) + " arcs, found " +
                                        std::to_string(inst.dag.arcs.size()));
    if (static_cast<int>(inst.pairs.pairs.size()) != r)
        throw ParseError(last_line, "header declares " + std::to_string(r) +
                                        " terminal pairs, found " +
                                        std::to_string(inst.pairs.pairs.size()));
    return inst;
}

CnfFormula parse_cnf(std::string_view text) {
    LineReader reader(text);
    CnfFormula phi;
    bool have_header = false;
    int declared_clauses = 0;
    std::vector<int> current;
    int last_line = 0;

    for (const auto& [number, line] : reader.lines) {
        last_line = number;
        if (blank(line)) continue;
        const auto toks = tokens(line);
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw ParseError(number, "duplicate header");
            if (toks.size() != 4 || toks[1] != "cnf")
                throw ParseError(number, "expected 'p cnf <vars> <clauses>'");
            phi.num_vars = parse_int(toks[2], number);
            declared_clauses = parse_int(toks[3], number);
            if (phi.num_vars < 0 || declared_clauses < 0)
                throw ParseError(number, "negative header field");
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(number, "clause before header");
        for (const auto& tok : toks) {
            const int lit = parse_int(tok, number);
            if (lit == 0) {
                if (current.empty()) throw ParseError(number, "empty clause");
                if (current.size() > 3)
                    throw ParseError(number, "clause with more than 3 literals");
                phi.clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > phi.num_vars)
                    throw ParseError(number, "literal " + tok + " out of range");
                current.push_back(lit);
            }
        }
    }
    if (!have_header) throw ParseError(last_line, "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(last_line, "unterminated clause");
    if (static_cast<int>(phi.clauses.size()) != declared_clauses)
        throw ParseError(last_line, "header declares " + std::to_string(declared_clauses) +
                                        " clauses, found " +
                                        std::to_string(phi.clauses.size()));
    return phi;
}

std::vector<TimeEdge> parse_edge_solution(std::string_view text) {
    LineReader reader(text);
    std::vector<TimeEdge> edges;
    for (const auto& [number, line] : reader.lines) {
        if (blank(line)) continue;
        const auto toks = tokens(line);
        if (toks[0] == "c" || toks[0] == "min") continue;
        if (toks[0] != "e" || toks.size() != 4)
            throw ParseError(number, "expected 'e <u> <v> <t>'");
        const int u = parse_int(toks[1], number);
        const int v = parse_int(toks[2], number);
        const int t = parse_int(toks[3], number);
        if (u == v) throw ParseError(number, "edge endpoints must differ");
        edges.emplace_back(u, v, t);
    }
    return edges;
}

std::vector<Connection> parse_connection_solution(std::string_view text) {
    LineReader reader(text);
    std::vector<Connection> conns;
    for (const auto& [number, line] : reader.lines) {
        if (blank(line)) continue;
        const auto toks = tokens(line);
        if (toks[0] == "min") continue;
        if (toks[0] != "c" || toks.size() != 3)
            throw ParseError(number, "expected 'c <u> <v>'");
        const int u = parse_int(toks[1], number);
        const int v = parse_int(toks[2], number);
        if (u == v) throw ParseError(number, "connection endpoints must differ");
        conns.emplace_back(u, v);
    }
    return conns;
}

std::string serialize_solution(const Solution& s) {
    std::ostringstream out;
    if (s.kind == ProblemTarget::edge_set) {
        auto sorted = s.time_edges;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& e : sorted)
            out << "e " << e.conn.u << ' ' << e.conn.v << ' ' << e.t << '\n';
    } else {
        auto sorted = s.connections;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& c : sorted) out << "c " << c.u << ' ' << c.v << '\n';
    }
    return out.str();
}

}  // namespace tfes
