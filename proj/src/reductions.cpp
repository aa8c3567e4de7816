#include "pspkit/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace pspkit {

namespace {

std::string name(const char* stem, std::initializer_list<int> idx) {
    std::string out = std::string(stem) + "[";
    bool first = true;
    for (int i : idx) {
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "]";
}

void require_sizes(const MccInstance& mcc, const char* who) {
    check_mcc(mcc);
    if (mcc.k < 2 || mcc.n < 2) throw std::invalid_argument(std::string(who) + ": requires k >= 2 and n >= 2");
}

// Collects edges and paths during construction.
struct Builder {
    std::vector<Edge> edges;
    PspInstance instance;
    ReductionOutput out;

    void edge(Vertex a, Vertex b) { edges.emplace_back(a, b); }
    void path(std::string label, std::vector<Vertex> vertices) {
        out.path_map.emplace(std::move(label), static_cast<int>(instance.paths.size()));
        instance.paths.push_back(SimplePath{std::move(vertices)});
    }
    ReductionOutput finish(int vertex_count, int target) {
        instance.graph = Graph(vertex_count, std::move(edges));
        instance.k = target;
        out.instance = std::move(instance);
        out.target = target;
        return std::move(out);
    }
};

// Vertex-cover gadget layout.
struct VcLayout {
    int k, n;
    int gadget() const { return k + (n - 1) + n * k; }
    Vertex c(int i, int l) const { return i * gadget() + l; }
    Vertex x(int i, int l) const { return i * gadget() + k + l; }
    Vertex v(int i, int j, int l) const { return i * gadget() + k + (n - 1) + j * k + l; }
};

// Pathwidth gadget layout: P_i, W_i, rows, C_i.
struct PwLayout {
    int k, n;
    int path_len() const { return 2 * k * (n + 1); }
    int gadget() const { return path_len() + n + k * n + k; }
    Vertex v(int i, int s, int l) const { return i * gadget() + s * 2 * k + 2 * l; }
    Vertex u(int i, int s, int l) const { return v(i, s, l) + 1; }
    Vertex w(int i, int s) const { return i * gadget() + path_len() + s; }
    Vertex x(int i, int s, int j) const { return i * gadget() + path_len() + n + j * n + s; }
    Vertex c(int i, int j) const { return i * gadget() + path_len() + n + k * n + j; }
    // position along P_i
    Vertex on_path(int i, int pos) const { return i * gadget() + pos; }
};

int binom2(int k) { return k * (k - 1) / 2; }

}  // namespace

ReductionOutput reduce_mcc_vc(const MccInstance& mcc) {
    require_sizes(mcc, "reduce_mcc_vc");
    const int k = mcc.k, n = mcc.n;
    const VcLayout L{k, n};
    Builder b;
    auto& names = b.out.vertex_map;

    for (int i = 0; i < k; ++i) {
        for (int l = 0; l < k; ++l) names[name("c", {i, l})] = L.c(i, l);
        for (int l = 0; l < n - 1; ++l) {
            names[name("x", {i, l})] = L.x(i, l);
            b.edge(L.x(i, l), L.c(i, 0));
        }
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < k; ++l) {
                names[name("v", {i, j, l})] = L.v(i, j, l);
                b.edge(L.v(i, j, l), L.c(i, l));
                if (l + 1 < k) b.edge(L.v(i, j, l), L.c(i, l + 1));
            }
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) b.edge(L.c(i, j), L.c(j, i));

    for (int i = 0; i < k; ++i)
        for (int l = 0; l < n - 1; ++l)
            for (int j = 0; j < n; ++j) {
                std::vector<Vertex> p{L.x(i, l)};
                for (int t = 0; t < k; ++t) {
                    p.push_back(L.c(i, t));
                    p.push_back(L.v(i, j, t));
                }
                b.path(name("long", {i, l, j}), std::move(p));
            }
    for (const Edge& e : mcc.edges) {
        const int i = mcc.group(e.u), ii = mcc.index_in_group(e.u);
        const int j = mcc.group(e.v), jj = mcc.index_in_group(e.v);
        b.path(name("short", {i, ii, j, jj}), {L.v(i, ii, j), L.c(i, j), L.c(j, i), L.v(j, jj, i)});
    }
    return b.finish(k * L.gadget(), k * (n - 1) + binom2(k));
}

ReductionOutput reduce_mcc_pw(const MccInstance& mcc) {
    require_sizes(mcc, "reduce_mcc_pw");
    const int k = mcc.k, n = mcc.n;
    const PwLayout L{k, n};
    Builder b;
    auto& names = b.out.vertex_map;

    for (int i = 0; i < k; ++i) {
        for (int s = 0; s <= n; ++s)
            for (int l = 0; l < k; ++l) {
                names[name("v", {i, s, l})] = L.v(i, s, l);
                names[name("u", {i, s, l})] = L.u(i, s, l);
            }
        for (int pos = 0; pos + 1 < L.path_len(); ++pos) b.edge(L.on_path(i, pos), L.on_path(i, pos + 1));
        for (int s = 0; s < n; ++s) {
            names[name("w", {i, s})] = L.w(i, s);
            b.edge(L.w(i, s), L.v(i, s, 0));
            b.edge(L.w(i, s), L.v(i, s + 1, 0));
        }
        for (int j = 0; j < k; ++j) {
            names[name("c", {i, j})] = L.c(i, j);
            for (int s = 0; s < n; ++s) {
                names[name("x", {i, s, j})] = L.x(i, s, j);
                b.edge(L.x(i, s, j), s + 1 < n ? L.x(i, s + 1, j) : L.c(i, j));
                b.edge(L.u(i, s, j), L.x(i, s, j));
            }
        }
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) b.edge(L.c(i, j), L.c(j, i));

    for (int i = 0; i < k; ++i)
        for (int s = 0; s < n; ++s) {
            // P_i up to v[i,s,1], detour through w[i,s], then from v[i,s+1,1] to the end
            std::vector<Vertex> p;
            for (Vertex at = L.v(i, 0, 0); at <= L.v(i, s, 0); ++at) p.push_back(at);
            p.push_back(L.w(i, s));
            for (Vertex at = L.v(i, s + 1, 0); at <= L.u(i, n, k - 1); ++at) p.push_back(at);
            b.path(name("l", {i, s}), std::move(p));
        }
    for (const Edge& e : mcc.edges) {
        const int i = mcc.group(e.u), ii = mcc.index_in_group(e.u);
        const int j = mcc.group(e.v), jj = mcc.index_in_group(e.v);
        std::vector<Vertex> p{L.v(i, ii, j), L.u(i, ii, j)};
        for (int s = ii; s < n; ++s) p.push_back(L.x(i, s, j));
        p.push_back(L.c(i, j));
        p.push_back(L.c(j, i));
        for (int s = n - 1; s >= jj; --s) p.push_back(L.x(j, s, i));
        p.push_back(L.u(j, jj, i));
        p.push_back(L.v(j, jj, i));
        b.path(name("s", {i, ii, j, jj}), std::move(p));
    }
    return b.finish(k * L.gadget(), k + binom2(k));
}

TreeDecomposition pw_witness(const MccInstance& mcc) {
    require_sizes(mcc, "pw_witness");
    const int k = mcc.k, n = mcc.n;
    const PwLayout L{k, n};
    TreeDecomposition dec;
    dec.vertex_count = k * L.gadget();

    std::vector<Vertex> all_c;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) all_c.push_back(L.c(i, j));

    for (int i = 0; i < k; ++i) {
        for (int pos = 0; pos + 1 < L.path_len(); ++pos) {
            std::vector<Vertex> bag{L.on_path(i, pos), L.on_path(i, pos + 1)};
            // sub-paths touched by this edge; the last one carries no x or w vertices
            for (int s : {pos / (2 * k), (pos + 1) / (2 * k)}) {
                if (s >= n) continue;
                for (int j = 0; j < k; ++j) bag.push_back(L.x(i, s, j));
                bag.push_back(L.w(i, s));
            }
            bag.insert(bag.end(), all_c.begin(), all_c.end());
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            dec.bags.push_back(std::move(bag));
        }
    }
    for (int b = 0; b + 1 < static_cast<int>(dec.bags.size()); ++b) dec.skeleton.emplace_back(b, b + 1);
    return dec;
}

}  // namespace pspkit
