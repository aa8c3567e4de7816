#include "pspkit/psp_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "pspkit/errors.hpp"
#include "text_reader.hpp"

namespace pspkit {

PspInstance parse_psp(std::istream& in) {
    detail::TextReader reader(in, '#');

    auto header = reader.expect("header 'psp 1'");
    if (header.size() != 2 || header[0] != "psp" || header[1] != "1")
        throw ParseError(reader.line(), "malformed header, expected 'psp 1'");

    auto sizes = reader.expect("'<n> <m> <p> <k>'");
    if (sizes.size() != 4) throw ParseError(reader.line(), "expected '<n> <m> <p> <k>'");
    const int n = reader.nonneg(sizes[0], "n");
    const int m = reader.nonneg(sizes[1], "m");
    const int p = reader.nonneg(sizes[2], "p");
    const int k = reader.nonneg(sizes[3], "k");

    std::vector<Edge> edges;
    std::set<Edge> seen;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto tok = reader.expect("edge line");
        if (tok.size() != 2) throw ParseError(reader.line(), "edge line needs exactly 2 endpoints");
        const int u = reader.nonneg(tok[0], "edge endpoint");
        const int v = reader.nonneg(tok[1], "edge endpoint");
        if (u >= n || v >= n) throw ParseError(reader.line(), "vertex out of range in edge " + tok[0] + " " + tok[1]);
        if (u == v) throw ParseError(reader.line(), "self-loop edge at vertex " + tok[0]);
        Edge e(u, v);
        if (!seen.insert(e).second) throw ParseError(reader.line(), "parallel edge " + to_string(e));
        edges.push_back(e);
    }

    PspInstance instance{Graph(n, std::move(edges)), {}, k};
    instance.paths.reserve(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        auto tok = reader.expect("path line");
        const int t = reader.nonneg(tok[0], "path edge count");
        if (t < 1) throw ParseError(reader.line(), "path must have at least one edge");
        if (tok.size() != static_cast<std::size_t>(t) + 2)
            throw ParseError(reader.line(), "path declares " + tok[0] + " edges but lists " +
                                                std::to_string(tok.size() - 1) + " vertices");
        SimplePath path;
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        for (std::size_t j = 1; j < tok.size(); ++j) {
            const int v = reader.nonneg(tok[j], "path vertex");
            if (v >= n) throw ParseError(reader.line(), "vertex " + tok[j] + " out of range");
            if (!path.vertices.empty()) {
                const int prev = path.vertices.back();
                if (prev == v) throw ParseError(reader.line(), "self-loop step " + tok[j - 1] + "-" + tok[j]);
                if (!instance.graph.has_edge(prev, v))
                    throw ParseError(reader.line(), "step " + tok[j - 1] + "-" + tok[j] + " is not an edge");
            }
            if (used[static_cast<std::size_t>(v)])
                throw ParseError(reader.line(), "path repeats vertex " + tok[j]);
            used[static_cast<std::size_t>(v)] = 1;
            path.vertices.push_back(v);
        }
        instance.paths.push_back(std::move(path));
    }
    reader.expect_end();
    return instance;
}

PspInstance parse_psp_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_psp(in);
}

std::string serialize_psp(const PspInstance& instance) {
    std::ostringstream out;
    const Graph& g = instance.graph;
    out << "psp 1\n"
        << g.vertex_count() << ' ' << g.edge_count() << ' ' << instance.paths.size() << ' ' << instance.k << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    for (const auto& path : instance.paths) {
        out << path.edge_count();
        for (Vertex v : path.vertices) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::vector<Diagnostic> validate_psp(const PspInstance& instance) {
    std::vector<Diagnostic> out;
    const Graph& g = instance.graph;
    for (std::size_t i = 0; i < instance.paths.size(); ++i) {
        const auto& vs = instance.paths[i].vertices;
        const int idx = static_cast<int>(i);
        if (vs.size() < 2) {
            out.push_back({idx, "path has no edge"});
            continue;
        }
        bool in_range = true;
        for (Vertex v : vs) {
            if (v < 0 || v >= g.vertex_count()) {
                out.push_back({idx, "vertex " + std::to_string(v) + " out of range"});
                in_range = false;
                break;
            }
        }
        if (!in_range) continue;
        if (!is_simple(instance.paths[i])) out.push_back({idx, "path visits a vertex more than once"});
        for (std::size_t j = 0; j + 1 < vs.size(); ++j) {
            if (!g.has_edge(vs[j], vs[j + 1]))
                out.push_back({idx, "missing edge " + std::to_string(vs[j]) + "-" + std::to_string(vs[j + 1])});
        }
    }
    if (instance.k < 0) out.push_back({-1, "negative k"});
    return out;
}

Solution parse_solution(std::istream& in) {
    detail::TextReader reader(in, '#');
    auto header = reader.expect("'solution <count>'");
    if (header.size() != 2 || header[0] != "solution")
        throw ParseError(reader.line(), "malformed header, expected 'solution <count>'");
    const int count = reader.nonneg(header[1], "count");
    Solution s;
    if (count > 0) {
        auto tok = reader.expect("index line");
        if (tok.size() != static_cast<std::size_t>(count))
            throw ParseError(reader.line(), "expected " + std::to_string(count) + " indices");
        for (const auto& t : tok) s.path_indices.push_back(reader.nonneg(t, "path index"));
        if (!std::is_sorted(s.path_indices.begin(), s.path_indices.end()))
            throw ParseError(reader.line(), "indices must be ascending");
    }
    reader.expect_end();
    return s;
}

Solution parse_solution_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_solution(in);
}

std::string serialize_solution(const Solution& solution) {
    std::vector<int> idx = solution.path_indices;
    std::sort(idx.begin(), idx.end());
    std::ostringstream out;
    out << "solution " << idx.size() << '\n';
    for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? " " : "") << idx[i];
    out << '\n';
    return out.str();
}

std::string instance_digest(const PspInstance& instance) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize_psp(instance)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

PspInstance read_psp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_psp(in);
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace pspkit
