#include "pspkit/tree_decomposition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "pspkit/errors.hpp"
#include "text_reader.hpp"

namespace pspkit {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

TreeDecomposition heuristic_tree_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    TreeDecomposition dec;
    dec.vertex_count = n;
    if (n == 0) return dec;

    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    std::vector<int> order_pos(static_cast<std::size_t>(n), -1);

    auto live_neighbors = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex u = 0; u < n; ++u)
            if (!gone[u] && adj[v][u]) out.push_back(u);
        return out;
    };
    auto fill_in = [&](const std::vector<Vertex>& nb) {
        long long fill = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) fill += adj[nb[i]][nb[j]] ? 0 : 1;
        return fill;
    };

    std::vector<std::vector<Vertex>> higher(static_cast<std::size_t>(n));  // neighbours at elimination time
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        long long best_fill = 0;
        std::size_t best_deg = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (gone[v]) continue;
            const auto nb = live_neighbors(v);
            const long long f = fill_in(nb);
            if (best < 0 || f < best_fill || (f == best_fill && nb.size() < best_deg)) {
                best = v;
                best_fill = f;
                best_deg = nb.size();
            }
        }
        auto nb = live_neighbors(best);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = 1;
        gone[best] = 1;
        order_pos[best] = step;
        higher[step] = nb;
        std::vector<Vertex> bag = nb;
        bag.push_back(best);
        std::sort(bag.begin(), bag.end());
        dec.bags.push_back(std::move(bag));
    }

    // bag of step i hangs below the bag of its earliest-eliminated neighbour
    for (int step = 0; step + 1 < n; ++step) {
        int parent = n;
        for (Vertex u : higher[step]) parent = std::min(parent, order_pos[u]);
        if (parent == n) parent = step + 1;
        dec.skeleton.emplace_back(step, parent);
    }
    return dec;
}

std::optional<std::string> decomposition_error(const Graph& g, const TreeDecomposition& dec) {
    const int n = g.vertex_count();
    const int b = static_cast<int>(dec.bags.size());
    if (dec.vertex_count != n)
        return "decomposition is over " + std::to_string(dec.vertex_count) + " vertices, graph has " + std::to_string(n);
    if (b == 0) return n == 0 ? std::nullopt : std::optional<std::string>("no bags");

    std::vector<std::vector<int>> tree(static_cast<std::size_t>(b));
    for (const auto& [x, y] : dec.skeleton) {
        if (x < 0 || y < 0 || x >= b || y >= b || x == y)
            return "skeleton edge " + std::to_string(x + 1) + "-" + std::to_string(y + 1) + " is invalid";
        tree[x].push_back(y);
        tree[y].push_back(x);
    }
    if (static_cast<int>(dec.skeleton.size()) != b - 1) return std::string("skeleton is not a tree");
    {
        std::vector<char> seen(static_cast<std::size_t>(b), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 0;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            ++count;
            for (int y : tree[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        if (count != b) return std::string("skeleton is not connected");
    }

    std::vector<std::vector<int>> bags_of(static_cast<std::size_t>(n));
    std::vector<std::vector<char>> member(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i) {
        member[i].assign(static_cast<std::size_t>(n), 0);
        for (Vertex v : dec.bags[i]) {
            if (v < 0 || v >= n) return "bag " + std::to_string(i + 1) + " holds out-of-range vertex " + std::to_string(v);
            if (member[i][v]) return "bag " + std::to_string(i + 1) + " repeats vertex " + std::to_string(v);
            member[i][v] = 1;
            bags_of[v].push_back(i);
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (bags_of[v].empty()) return "vertex " + std::to_string(v) + " is in no bag";
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (int i : bags_of[e.u]) covered = covered || member[i][e.v];
        if (!covered) return "edge " + to_string(e) + " is not covered by any bag";
    }
    for (Vertex v = 0; v < n; ++v) {
        std::vector<char> seen(static_cast<std::size_t>(b), 0);
        std::vector<int> stack{bags_of[v].front()};
        seen[stack.front()] = 1;
        std::size_t count = 0;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            ++count;
            for (int y : tree[x])
                if (!seen[y] && member[y][v]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        if (count != bags_of[v].size()) return "bags containing vertex " + std::to_string(v) + " are not connected";
    }
    return std::nullopt;
}

bool validate_decomposition(const Graph& g, const TreeDecomposition& dec) { return !decomposition_error(g, dec); }

bool validate_decomposition(const ConflictGraph& conflict, const TreeDecomposition& dec) {
    return validate_decomposition(conflict.to_graph(), dec);
}

TreeDecomposition lift_to_conflict(const TreeDecomposition& dec, const PspInstance& instance) {
    const int n = instance.graph.vertex_count();
    std::vector<std::vector<int>> paths_at(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < instance.paths.size(); ++i)
        for (Vertex v : instance.paths[i].vertices) paths_at[v].push_back(static_cast<int>(i));

    TreeDecomposition out;
    out.vertex_count = static_cast<int>(instance.paths.size());
    out.skeleton = dec.skeleton;
    for (const auto& bag : dec.bags) {
        std::vector<int> lifted;
        for (Vertex v : bag) lifted.insert(lifted.end(), paths_at[v].begin(), paths_at[v].end());
        std::sort(lifted.begin(), lifted.end());
        lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
        out.bags.push_back(std::move(lifted));
    }
    return out;
}

std::uint64_t lifted_bag_bound(int width, int max_degree, int max_length) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t value = static_cast<std::uint64_t>(std::max(width + 1, 0));
    for (int i = 0; i < max_length; ++i) {
        const auto d = static_cast<std::uint64_t>(std::max(max_degree, 0));
        if (d != 0 && value > cap / d) return cap;
        value *= d;
    }
    return value;
}

TreeDecomposition parse_decomposition(std::istream& in) {
    detail::TextReader reader(in, 'c');
    auto header = reader.expect("'s td <bags> <width+1> <n>'");
    if (header.size() != 5 || header[0] != "s" || header[1] != "td")
        throw ParseError(reader.line(), "malformed header, expected 's td <bags> <width+1> <n>'");
    const int b = reader.nonneg(header[2], "bag count");
    const int declared = reader.nonneg(header[3], "bag size");
    TreeDecomposition dec;
    dec.vertex_count = reader.nonneg(header[4], "vertex count");
    dec.bags.resize(static_cast<std::size_t>(b));
    std::vector<char> seen(static_cast<std::size_t>(b), 0);
    for (int i = 0; i < b; ++i) {
        auto tok = reader.expect("bag line");
        if (tok.size() < 2 || tok[0] != "b") throw ParseError(reader.line(), "expected 'b <id> <vertices...>'");
        const int id = reader.nonneg(tok[1], "bag id");
        if (id < 1 || id > b) throw ParseError(reader.line(), "bag id " + tok[1] + " out of range");
        if (seen[id - 1]) throw ParseError(reader.line(), "bag " + tok[1] + " listed twice");
        seen[id - 1] = 1;
        auto& bag = dec.bags[id - 1];
        for (std::size_t j = 2; j < tok.size(); ++j) {
            const int v = reader.nonneg(tok[j], "bag vertex");
            if (v < 1 || v > dec.vertex_count) throw ParseError(reader.line(), "vertex " + tok[j] + " out of range");
            bag.push_back(v - 1);
        }
        std::sort(bag.begin(), bag.end());
    }
    std::vector<std::string> tok;
    while (reader.next(tok)) {
        if (tok.size() != 2) throw ParseError(reader.line(), "expected skeleton edge '<id> <id>'");
        const int x = reader.nonneg(tok[0], "bag id"), y = reader.nonneg(tok[1], "bag id");
        if (x < 1 || y < 1 || x > b || y > b) throw ParseError(reader.line(), "skeleton edge refers to unknown bag");
        dec.skeleton.emplace_back(x - 1, y - 1);
    }
    if (b > 0 && dec.width() + 1 != declared)
        throw ParseError(1, "header declares bag size " + std::to_string(declared) + " but largest bag has " +
                                std::to_string(dec.width() + 1));
    return dec;
}

TreeDecomposition parse_decomposition_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_decomposition(in);
}

std::string serialize_decomposition(const TreeDecomposition& dec) {
    std::ostringstream out;
    out << "s td " << dec.bags.size() << ' ' << std::max(dec.width() + 1, 0) << ' ' << dec.vertex_count << '\n';
    for (std::size_t i = 0; i < dec.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : dec.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (const auto& [x, y] : dec.skeleton) out << x + 1 << ' ' << y + 1 << '\n';
    return out.str();
}

}  // namespace pspkit
