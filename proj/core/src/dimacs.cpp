#include "mvdsp/dimacs.hpp"

#include "mvdsp/error.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

namespace mvdsp {

namespace {

long long to_int(std::size_t line, const std::string& token) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "not an integer: '" + token + "'");
    return value;
}

} // namespace

Graph parse_dimacs_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    bool header = false;
    long long n = 0, m = 0;
    std::vector<Arc> edges;
    while (std::getline(in, raw)) {
        ++line;
        std::istringstream ls(raw);
        std::string kind;
        if (!(ls >> kind) || kind == "c") continue;
        if (kind == "p") {
            std::string format, ns, ms;
            if (header || !(ls >> format >> ns >> ms) || (format != "edge" && format != "col"))
                throw ParseError(line, "expected a single 'p edge <n> <m>' header");
            n = to_int(line, ns);
            m = to_int(line, ms);
            if (n < 0 || m < 0) throw ParseError(line, "negative count in header");
            header = true;
        } else if (kind == "e") {
            if (!header) throw ParseError(line, "edge before header");
            std::string us, vs;
            if (!(ls >> us >> vs)) throw ParseError(line, "expected 'e <u> <v>'");
            long long u = to_int(line, us), v = to_int(line, vs);
            if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line, "vertex out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(line, "self-loop");
            edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), Weight::one()});
        } else {
            throw ParseError(line, "unknown line type '" + kind + "'");
        }
    }
    if (!header) throw ParseError(0, "missing 'p edge' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line, "header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                                   " follow");
    return Graph(static_cast<std::size_t>(n), false, edges);
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    bool header = false;
    long long declared = 0;
    CnfFormula f;
    std::vector<int> clause;
    while (std::getline(in, raw)) {
        ++line;
        std::istringstream ls(raw);
        std::string tok;
        if (!(ls >> tok) || tok == "c") continue;
        if (tok == "%") break; // SATLIB end marker
        if (tok == "p") {
            std::string format, vs, cs;
            if (header || !(ls >> format >> vs >> cs) || format != "cnf")
                throw ParseError(line, "expected a single 'p cnf <vars> <clauses>' header");
            long long vars = to_int(line, vs);
            declared = to_int(line, cs);
            if (vars < 0 || declared < 0 || vars > 1000000) throw ParseError(line, "bad counts in header");
            f.variables = static_cast<std::size_t>(vars);
            header = true;
            continue;
        }
        if (!header) throw ParseError(line, "clause before header");
        do {
            long long lit = to_int(line, tok);
            if (lit == 0) {
                f.clauses.push_back(std::move(clause));
                clause.clear();
            } else {
                if (lit < -static_cast<long long>(f.variables) || lit > static_cast<long long>(f.variables))
                    throw ParseError(line, "literal " + tok + " outside 1.." + std::to_string(f.variables));
                clause.push_back(static_cast<int>(lit));
            }
        } while (ls >> tok);
    }
    if (!header) throw ParseError(0, "missing 'p cnf' header");
    if (!clause.empty()) f.clauses.push_back(std::move(clause));
    if (static_cast<long long>(f.clauses.size()) != declared)
        throw ParseError(line, "header declares " + std::to_string(declared) + " clauses but " +
                                   std::to_string(f.clauses.size()) + " follow");
    return f;
}

} // namespace mvdsp
