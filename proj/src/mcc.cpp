#include "pspkit/mcc.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "pspkit/errors.hpp"
#include "pspkit/random_gen.hpp"
#include "text_reader.hpp"

namespace pspkit {

void check_mcc(const MccInstance& mcc) {
    if (mcc.k < 1 || mcc.n < 1) throw std::invalid_argument("mcc: k and n must be positive");
    const int total = mcc.k * mcc.n;
    std::set<Edge> seen;
    for (const Edge& e : mcc.edges) {
        if (e.u < 0 || e.v >= total) throw std::invalid_argument("mcc: edge " + to_string(e) + " out of range");
        if (mcc.group(e.u) == mcc.group(e.v))
            throw std::invalid_argument("mcc: edge " + to_string(e) + " joins two vertices of group " +
                                        std::to_string(mcc.group(e.u)));
        if (!seen.insert(e).second) throw std::invalid_argument("mcc: duplicate edge " + to_string(e));
    }
}

MccInstance parse_mcc(std::istream& in) {
    detail::TextReader reader(in, '#');
    auto header = reader.expect("header 'mcc 1'");
    if (header.size() != 2 || header[0] != "mcc" || header[1] != "1")
        throw ParseError(reader.line(), "malformed header, expected 'mcc 1'");
    auto sizes = reader.expect("'<k> <n> <m>'");
    if (sizes.size() != 3) throw ParseError(reader.line(), "expected '<k> <n> <m>'");
    MccInstance mcc;
    mcc.k = reader.nonneg(sizes[0], "k");
    mcc.n = reader.nonneg(sizes[1], "n");
    const int m = reader.nonneg(sizes[2], "m");
    if (mcc.k < 1 || mcc.n < 1) throw ParseError(reader.line(), "k and n must be positive");
    const long long total = static_cast<long long>(mcc.k) * mcc.n;
    std::set<Edge> seen;
    for (int i = 0; i < m; ++i) {
        auto tok = reader.expect("edge line");
        if (tok.size() != 2) throw ParseError(reader.line(), "edge line needs exactly 2 endpoints");
        const int u = reader.nonneg(tok[0], "edge endpoint");
        const int v = reader.nonneg(tok[1], "edge endpoint");
        if (u >= total || v >= total) throw ParseError(reader.line(), "vertex out of range in edge " + tok[0] + " " + tok[1]);
        if (u / mcc.n == v / mcc.n) throw ParseError(reader.line(), "edge " + tok[0] + " " + tok[1] + " lies inside one group");
        if (!seen.insert(Edge(u, v)).second) throw ParseError(reader.line(), "duplicate edge " + tok[0] + " " + tok[1]);
        mcc.edges.emplace_back(u, v);
    }
    reader.expect_end();
    return mcc;
}

MccInstance parse_mcc_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_mcc(in);
}

std::string serialize_mcc(const MccInstance& mcc) {
    std::ostringstream out;
    out << "mcc 1\n" << mcc.k << ' ' << mcc.n << ' ' << mcc.edges.size() << '\n';
    for (const Edge& e : mcc.edges) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::vector<Edge> cross_pairs(int k, int n) {
    std::vector<Edge> out;
    for (int a = 0; a < k * n; ++a)
        for (int b = a + 1; b < k * n; ++b)
            if (a / n != b / n) out.emplace_back(a, b);
    return out;
}

MccInstance mcc_from_mask(int k, int n, std::uint64_t mask) {
    MccInstance mcc{k, n, {}};
    const auto pairs = cross_pairs(k, n);
    for (std::size_t i = 0; i < pairs.size() && i < 64; ++i)
        if ((mask >> i) & 1) mcc.edges.push_back(pairs[i]);
    return mcc;
}

MccInstance random_mcc(int k, int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    MccInstance mcc{k, n, {}};
    for (const Edge& e : cross_pairs(k, n))
        if (rng.chance(p)) mcc.edges.push_back(e);
    return mcc;
}

std::optional<std::vector<Vertex>> solve_mcc_bruteforce(const MccInstance& mcc, std::uint64_t budget) {
    check_mcc(mcc);
    std::uint64_t space = 1;
    for (int i = 0; i < mcc.k; ++i) {
        space *= static_cast<std::uint64_t>(mcc.n);
        if (space > budget)
            throw BudgetExceeded("mcc: n^k exceeds the search budget of " + std::to_string(budget));
    }
    const int total = mcc.k * mcc.n;
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(total), std::vector<char>(static_cast<std::size_t>(total), 0));
    for (const Edge& e : mcc.edges) adj[e.u][e.v] = adj[e.v][e.u] = 1;

    std::vector<Vertex> pick;
    auto rec = [&](auto& self, int group) -> bool {
        if (group == mcc.k) return true;
        for (int j = 0; j < mcc.n; ++j) {
            const Vertex v = group * mcc.n + j;
            bool ok = true;
            for (Vertex u : pick) ok = ok && adj[u][v];
            if (!ok) continue;
            pick.push_back(v);
            if (self(self, group + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return pick;
}

}  // namespace pspkit
