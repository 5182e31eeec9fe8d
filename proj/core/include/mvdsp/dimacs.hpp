#pragma once

#include "mvdsp/generators.hpp"
#include "mvdsp/graph.hpp"

#include <string_view>

namespace mvdsp {

/// DIMACS edge format: `c` comments, `p edge <n> <m>`, then `e <u> <v>` with
/// 1-based ids. Yields an undirected unit-weight graph.
Graph parse_dimacs_graph(std::string_view text);

/// DIMACS CNF: `c` comments, `p cnf <vars> <clauses>`, clauses terminated by 0.
CnfFormula parse_dimacs_cnf(std::string_view text);

} // namespace mvdsp
