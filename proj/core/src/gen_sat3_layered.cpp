#include "mvdsp/generators.hpp"

#include "mvdsp/error.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace mvdsp {

// Layers are 1-based here: layer L of the description below is builder layer L + 1.
GadgetInstance gen_sat3_layered(const CnfFormula& formula) {
    const std::size_t n = formula.variables;
    const std::size_t m = formula.clauses.size();
    if (n == 0 || m == 0) throw GadgetError("formula is empty");
    for (std::size_t j = 0; j < m; ++j) {
        const auto& clause = formula.clauses[j];
        const std::string name = "clause " + std::to_string(j + 1);
        if (clause.empty() || clause.size() > 3) throw GadgetError(name + " must have one to three literals");
        for (std::size_t a = 0; a < clause.size(); ++a) {
            const int lit = clause[a];
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > n)
                throw GadgetError(name + " has literal " + std::to_string(lit) + " outside 1.." + std::to_string(n));
            for (std::size_t b = 0; b < a; ++b)
                if (std::abs(clause[b]) == std::abs(lit)) throw GadgetError(name + " repeats variable " + std::to_string(std::abs(lit)));
        }
    }

    const std::size_t width = m + 1;
    const std::size_t last = n * width; // layer of the targets, 0-based
    GadgetBuilder b;

    std::vector<TerminalPair> pairs;
    for (std::size_t j = 1; j <= m; ++j) {
        VertexId s = b.add_vertex("s" + std::to_string(j), 1);
        VertexId t = b.add_vertex("t" + std::to_string(j), last + 1);
        pairs.push_back({s, t});
    }

    // Selection gadget: u_0..u_n with two chains v^i, w^i of m vertices between
    // u_{i-1} and u_i. u_i sits at layer i(m+1), v_j^i and w_j^i at (i-1)(m+1)+j.
    std::vector<VertexId> u(n + 1);
    std::vector<std::vector<VertexId>> v(n + 1), w(n + 1);
    u[0] = b.add_vertex("u0", 1);
    for (std::size_t i = 1; i <= n; ++i) {
        const std::string is = std::to_string(i);
        for (std::size_t j = 1; j <= m; ++j) {
            v[i].push_back(b.add_vertex("v" + is + "_" + std::to_string(j), (i - 1) * width + j + 1));
            w[i].push_back(b.add_vertex("w" + is + "_" + std::to_string(j), (i - 1) * width + j + 1));
        }
        u[i] = b.add_vertex("u" + is, i * width + 1);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        for (const auto* chain : {&v[i], &w[i]}) {
            VertexId prev = u[i - 1];
            for (VertexId c : *chain) {
                b.add_edge(prev, c);
                prev = c;
            }
            b.add_edge(prev, u[i]);
        }
    }

    // One route per literal of clause j, through every layer, meeting the
    // chain of the value that does not satisfy the literal at layer (i-1)(m+1)+j.
    for (std::size_t j = 1; j <= m; ++j) {
        const auto& clause = formula.clauses[j - 1];
        for (std::size_t r = 0; r < clause.size(); ++r) {
            const int lit = clause[r];
            const auto i = static_cast<std::size_t>(std::abs(lit));
            const std::size_t meet = (i - 1) * width + j;
            const VertexId shared = lit > 0 ? w[i][j - 1] : v[i][j - 1];
            const std::string prefix = "c" + std::to_string(j) + "." + std::to_string(r + 1) + "_";
            VertexId prev = pairs[j - 1].source;
            for (std::size_t layer = 1; layer < last; ++layer) {
                VertexId cur = layer == meet ? shared : b.add_vertex(prefix + std::to_string(layer), layer + 1);
                b.add_edge(prev, cur);
                prev = cur;
            }
            b.add_edge(prev, pairs[j - 1].target);
        }
    }
    pairs.push_back({u[0], u[n]});

    const std::size_t k = pairs.size();
    return b.build(std::move(pairs), k, Provenance::sat3_layered, "all pairs connectable iff the formula is satisfiable",
                   true);
}

} // namespace mvdsp
