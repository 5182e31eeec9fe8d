#include "mvdsp/io.hpp"

#include "mvdsp/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace mvdsp {

namespace {

struct Line {
    std::size_t number = 0;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            if (j > i) line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

std::uint64_t to_count(const Line& line, std::string_view token, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line.number, std::string(what) + " is not a non-negative integer: '" + std::string(token) + "'");
    return value;
}

VertexId to_vertex(const Line& line, std::string_view token, std::size_t n) {
    auto v = to_count(line, token, "vertex id");
    if (v >= n) throw ParseError(line.number, "vertex id " + std::string(token) + " out of range (n = " + std::to_string(n) + ")");
    return static_cast<VertexId>(v);
}

void expect_arity(const Line& line, std::size_t count, const char* form) {
    if (line.tokens.size() != count) throw ParseError(line.number, std::string("expected '") + form + "'");
}

} // namespace

Instance parse_instance(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty instance document");
    const Line& h = lines.front();
    if (h.tokens[0] != "p" || h.tokens.size() != 7 || h.tokens[1] != "mvdsp")
        throw ParseError(h.number, "expected header 'p mvdsp <n> <m> <k> <p> <u|d>'");
    const std::size_t n = to_count(h, h.tokens[2], "n");
    const std::size_t m = to_count(h, h.tokens[3], "m");
    const std::size_t k = to_count(h, h.tokens[4], "k");
    const std::size_t p = to_count(h, h.tokens[5], "p");
    if (h.tokens[6] != "u" && h.tokens[6] != "d") throw ParseError(h.number, "graph kind must be 'u' or 'd'");
    const bool directed = h.tokens[6] == "d";
    if (n > static_cast<std::size_t>(std::numeric_limits<VertexId>::max())) throw ParseError(h.number, "n too large");
    if (p > k) throw ParseError(h.number, "p exceeds k");

    std::vector<Arc> arcs;
    std::set<std::pair<VertexId, VertexId>> seen_arcs;
    std::vector<TerminalPair> pairs;
    std::map<std::size_t, std::vector<VertexId>> layers;
    std::vector<char> layered(n, 0);
    std::size_t last_line = h.number;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        last_line = line.number;
        const auto kind = line.tokens[0];
        if (kind == "e") {
            expect_arity(line, 4, "e <u> <v> <weight>");
            if (arcs.size() == m) throw ParseError(line.number, "more arc lines than the header's m = " + std::to_string(m));
            VertexId u = to_vertex(line, line.tokens[1], n);
            VertexId v = to_vertex(line, line.tokens[2], n);
            if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
            Weight w;
            try {
                w = Weight::parse(line.tokens[3]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line.number, e.what());
            }
            auto key = directed ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
            if (!seen_arcs.insert(key).second)
                throw ParseError(line.number, "duplicate arc " + std::to_string(u) + " " + std::to_string(v));
            arcs.push_back({u, v, w});
        } else if (kind == "t") {
            expect_arity(line, 3, "t <s> <t>");
            if (pairs.size() == k) throw ParseError(line.number, "more terminal lines than the header's k = " + std::to_string(k));
            VertexId s = to_vertex(line, line.tokens[1], n);
            VertexId t = to_vertex(line, line.tokens[2], n);
            if (s == t) throw ParseError(line.number, "terminal pair with s == t");
            pairs.push_back({s, t});
        } else if (kind == "l") {
            if (line.tokens.size() < 2) throw ParseError(line.number, "expected 'l <layer> <v> ...'");
            const std::size_t index = to_count(line, line.tokens[1], "layer index");
            if (index == 0) throw ParseError(line.number, "layer indices start at 1");
            if (layers.contains(index)) throw ParseError(line.number, "layer " + std::to_string(index) + " listed twice");
            auto& layer = layers[index];
            for (std::size_t i = 2; i < line.tokens.size(); ++i) {
                VertexId v = to_vertex(line, line.tokens[i], n);
                if (layered[static_cast<std::size_t>(v)]++)
                    throw ParseError(line.number, "vertex " + std::to_string(v) + " already placed in a layer");
                layer.push_back(v);
            }
        } else if (kind == "p") {
            throw ParseError(line.number, "second header line");
        } else {
            throw ParseError(line.number, "unknown line type '" + std::string(kind) + "'");
        }
    }
    if (arcs.size() != m)
        throw ParseError(last_line, "header declares m = " + std::to_string(m) + " but " + std::to_string(arcs.size()) +
                                        " arc lines follow");
    if (pairs.size() != k)
        throw ParseError(last_line, "header declares k = " + std::to_string(k) + " but " + std::to_string(pairs.size()) +
                                        " terminal lines follow");

    std::optional<Layering> layering;
    if (!layers.empty()) {
        if (layers.rbegin()->first != layers.size())
            throw ParseError(last_line, "layer indices must be exactly 1.." + std::to_string(layers.size()));
        layering.emplace();
        for (auto& [index, vs] : layers) layering->push_back(std::move(vs));
    }
    try {
        return Instance(Graph(n, directed, arcs), std::move(pairs), p, std::move(layering));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
}

std::string serialize_instance(const Instance& instance) {
    const Graph& g = instance.graph();
    const auto edges = g.edges();
    std::ostringstream out;
    out << "p mvdsp " << g.vertex_count() << ' ' << edges.size() << ' ' << instance.pair_count() << ' '
        << instance.target() << ' ' << (g.directed() ? 'd' : 'u') << '\n';
    for (const Arc& a : edges) out << "e " << a.tail << ' ' << a.head << ' ' << a.weight << '\n';
    for (const auto& p : instance.pairs()) out << "t " << p.source << ' ' << p.target << '\n';
    if (instance.layering()) {
        const Layering& ls = *instance.layering();
        for (std::size_t i = 0; i < ls.size(); ++i) {
            out << "l " << i + 1;
            for (VertexId v : ls[i]) out << ' ' << v;
            out << '\n';
        }
    }
    return out.str();
}

Solution parse_solution(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty solution document");
    const Line& h = lines.front();
    if (h.tokens[0] != "s" || h.tokens.size() != 2) throw ParseError(h.number, "expected header 's <count>'");
    const std::size_t count = to_count(h, h.tokens[1], "path count");
    Solution solution;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens[0] != "P" || line.tokens.size() < 3)
            throw ParseError(line.number, "expected 'P <pair_index> <v0> ... <vL>'");
        if (solution.size() == count) throw ParseError(line.number, "more path lines than the header's count");
        SolutionEntry entry;
        entry.pair_index = to_count(line, line.tokens[1], "pair index");
        for (std::size_t i = 2; i < line.tokens.size(); ++i) {
            auto v = to_count(line, line.tokens[i], "vertex id");
            if (v > static_cast<std::uint64_t>(std::numeric_limits<VertexId>::max()))
                throw ParseError(line.number, "vertex id too large");
            entry.path.vertices.push_back(static_cast<VertexId>(v));
        }
        solution.entries.push_back(std::move(entry));
    }
    if (solution.size() != count)
        throw ParseError(lines.back().number, "header declares " + std::to_string(count) + " paths but " +
                                                  std::to_string(solution.size()) + " follow");
    return solution;
}

std::string serialize_solution(const Solution& solution) {
    std::ostringstream out;
    out << "s " << solution.size() << '\n';
    for (const auto& e : solution.entries) {
        out << "P " << e.pair_index;
        for (VertexId v : e.path.vertices) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
    if (!out) throw Error("write to '" + path + "' failed");
}

} // namespace mvdsp
