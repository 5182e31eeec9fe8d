#pragma once

#include "mvdsp/instance.hpp"

#include <string>
#include <string_view>

namespace mvdsp {

/// Line-oriented instance text:
///
///     # comment
///     p mvdsp <n> <m> <k> <p> <u|d>
///     e <u> <v> <weight>        weight is "<int>" or "<int>/<int>"
///     t <s> <t>                 k lines, pair i is the i-th one
///     l <layer> <v> ...         optional, layers numbered from 1
///
/// Vertex ids are 0-based. Throws ParseError with the offending line.
Instance parse_instance(std::string_view text);

/// Canonical text: header, arcs sorted (one line per undirected edge, u < v),
/// terminals in pair order, then layers in order with sorted vertices.
std::string serialize_instance(const Instance& instance);

/// Solution text: `s <count>` then one `P <pair_index> <v0> ... <vL>` per path.
Solution parse_solution(std::string_view text);
std::string serialize_solution(const Solution& solution);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace mvdsp
