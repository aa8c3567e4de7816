#include "pspkit/fvs_solver.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "pspkit/errors.hpp"
#include "pspkit/tree_solver.hpp"

namespace pspkit {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > kSaturated / b ? kSaturated : a * b;
}

// Bell(n) via the Bell triangle.
std::uint64_t bell(int n) {
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t x : row) next.push_back(sat_add(next.back(), x));
        row = std::move(next);
    }
    return row.front();
}

bool contains(std::span<const EdgeId> sorted, EdgeId e) { return std::binary_search(sorted.begin(), sorted.end(), e); }

}  // namespace

std::uint64_t guess_space_size(const StructureDecomposition& decomp) {
    const std::size_t d = decomp.d_components.size();
    std::uint64_t deficits = d >= 64 ? kSaturated : (std::uint64_t{1} << d);
    return sat_mul(deficits, bell(static_cast<int>(decomp.core_edges.size()) + 1));
}

std::uint64_t enumerate_guesses(const StructureDecomposition& decomp, const std::function<bool(const Guess&)>& visit) {
    const int d = static_cast<int>(decomp.d_components.size());
    const int m = static_cast<int>(decomp.core_edges.size());
    if (d >= 63) throw BudgetExceeded("enumerate_guesses: too many 2-external components");

    std::uint64_t visited = 0;
    bool stop = false;
    std::vector<int> label(static_cast<std::size_t>(m), 0);
    Guess guess;
    guess.deficit.assign(static_cast<std::size_t>(d), 0);

    auto emit_partition = [&](int blocks) {
        guess.blocks.assign(static_cast<std::size_t>(blocks), {});
        for (int i = 0; i < m; ++i)
            if (label[i] > 0) guess.blocks[label[i] - 1].push_back(decomp.core_edges[i]);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d) && !stop; ++mask) {
            for (int i = 0; i < d; ++i) guess.deficit[i] = (mask >> i) & 1;
            ++visited;
            if (!visit(guess)) stop = true;
        }
    };

    // restricted-growth strings where label 0 means "unused"
    auto rec = [&](auto& self, int pos, int blocks) -> void {
        if (stop) return;
        if (pos == m) {
            emit_partition(blocks);
            return;
        }
        for (int l = 0; l <= blocks + 1 && !stop; ++l) {
            label[pos] = l;
            self(self, pos + 1, std::max(blocks, l));
        }
    };
    rec(rec, 0, 0);
    return visited;
}

std::vector<EdgeId> path_type(const Graph& g, const SimplePath& p, const StructureDecomposition& decomp) {
    const auto ids = path_edge_ids(g, p);
    if (!ids) throw std::invalid_argument("path_type: path not in graph");
    std::vector<EdgeId> out;
    std::set_intersection(ids->begin(), ids->end(), decomp.core_edges.begin(), decomp.core_edges.end(),
                          std::back_inserter(out));
    return out;
}

FvsContext::FvsContext(const Graph& graph, const std::vector<SimplePath>& paths, StructureDecomposition decomp)
    : graph_(graph), paths_(paths), decomp_(std::move(decomp)) {
    for (std::size_t i = 0; i < decomp_.d_components.size(); ++i)
        comps_.push_back(Comp{&decomp_.d_components[i], true, static_cast<int>(i)});
    for (const auto& t : decomp_.t_components) comps_.push_back(Comp{&t, false, -1});

    comp_of_edge_.assign(static_cast<std::size_t>(graph_.edge_count()), -1);
    for (std::size_t c = 0; c < comps_.size(); ++c)
        for (EdgeId e : comps_[c].part->edges) comp_of_edge_[e] = static_cast<int>(c);

    comp_internal_.resize(comps_.size());
    for (std::size_t i = 0; i < paths_.size(); ++i) {
        auto ids = path_edge_ids(graph_, paths_[i]);
        if (!ids) throw std::invalid_argument("FvsContext: path " + std::to_string(i) + " not in graph");
        std::vector<EdgeId> type;
        std::set_intersection(ids->begin(), ids->end(), decomp_.core_edges.begin(), decomp_.core_edges.end(),
                              std::back_inserter(type));
        if (type.empty()) comp_internal_[comp_of_edge_[ids->front()]].push_back(static_cast<int>(i));
        path_edges_.push_back(std::move(*ids));
        types_.push_back(std::move(type));
    }
    for (std::size_t c = 0; c < comps_.size(); ++c)
        opt_.push_back(static_cast<int>(pack_component(static_cast<int>(c), {}).size()));
}

std::vector<int> FvsContext::pack_component(int comp, std::span<const EdgeId> removed) const {
    std::vector<char> in_forest(static_cast<std::size_t>(graph_.edge_count()), 0);
    for (EdgeId e : comps_[comp].part->edges) in_forest[e] = 1;
    for (EdgeId e : removed) in_forest[e] = 0;
    std::vector<int> candidates;
    for (int p : comp_internal_[comp]) {
        const auto& edges = path_edges_[p];
        if (std::all_of(edges.begin(), edges.end(), [&](EdgeId e) { return in_forest[e] != 0; }))
            candidates.push_back(p);
    }
    return pack_forest_paths(graph_, in_forest, paths_, candidates);
}

int FvsContext::residual_opt(int comp, std::vector<EdgeId> removed) {
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    if (removed.empty()) return opt_[comp];
    auto key = std::make_pair(comp, std::move(removed));
    if (auto it = residual_cache_.find(key); it != residual_cache_.end()) return it->second;
    const int value = static_cast<int>(pack_component(comp, key.second).size());
    residual_cache_.emplace(std::move(key), value);
    return value;
}

int FvsContext::block_of_type(const Guess& guess, int path) const {
    const auto& type = types_[path];
    if (type.empty()) return -1;
    for (int b = 0; b < guess.block_count(); ++b)
        if (guess.blocks[b] == type) return b;
    return -1;
}

bool FvsContext::blocks_contain_type(const Guess& guess, int path) const { return block_of_type(guess, path) >= 0; }

bool FvsContext::is_compatible(std::span<const int> path_set, const Guess& guess) {
    std::vector<EdgeId> all;
    for (int p : path_set) {
        if (!blocks_contain_type(guess, p)) return false;
        all.insert(all.end(), path_edges_[p].begin(), path_edges_[p].end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;

    std::map<int, std::vector<EdgeId>> removed;
    for (EdgeId e : all)
        if (comp_of_edge_[e] >= 0) removed[comp_of_edge_[e]].push_back(e);
    for (auto& [c, edges] : removed) {
        const int residual = residual_opt(c, std::move(edges));
        const Comp& comp = comps_[c];
        if (comp.two_external) {
            if (residual < opt_[c] - guess.deficit[comp.d_index]) return false;
        } else if (residual != opt_[c]) {
            return false;
        }
    }
    return true;
}

bool FvsContext::obs_screen(const Guess& guess) const {
    for (const auto& block : guess.blocks) {
        int single = 0;
        for (const Comp& c : comps_) {
            int hits = 0;
            for (EdgeId e : c.part->external_edges) hits += contains(block, e) ? 1 : 0;
            if (hits == 1 && ++single >= 3) return false;
        }
    }
    return true;
}

bool FvsContext::screen_guess(const Guess& guess) {
    if (!obs_screen(guess)) return false;
    for (int b = 0; b < guess.block_count(); ++b) {
        bool found = false;
        for (int p = 0; p < static_cast<int>(paths_.size()) && !found; ++p) {
            if (types_[p] != guess.blocks[b]) continue;
            const int one[] = {p};
            found = is_compatible(one, guess);
        }
        if (!found) return false;
    }
    return true;
}

std::vector<TypeSequence> FvsContext::build_type_sequences(const Guess& guess) const {
    const int l = guess.block_count();
    std::vector<int> block_of_edge(static_cast<std::size_t>(graph_.edge_count()), -1);
    for (int b = 0; b < l; ++b)
        for (EdgeId e : guess.blocks[b]) block_of_edge[e] = b;

    // multigraph on blocks: one edge per D component joining two distinct blocks
    struct Link {
        int a, b;
    };
    std::vector<Link> links;
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(l));
    for (const auto& d : decomp_.d_components) {
        const int a = block_of_edge[d.external_edges[0]];
        const int b = block_of_edge[d.external_edges[1]];
        if (a < 0 || b < 0 || a == b) continue;
        incident[a].push_back(static_cast<int>(links.size()));
        incident[b].push_back(static_cast<int>(links.size()));
        links.push_back({a, b});
    }
    for (int b = 0; b < l; ++b)
        if (incident[b].size() > 2)
            throw std::logic_error("build_type_sequences: block " + std::to_string(b + 1) + " has degree " +
                                   std::to_string(incident[b].size()));

    std::vector<char> seen(static_cast<std::size_t>(l), 0), used(links.size(), 0);
    auto walk = [&](int start, bool cyclic) {
        TypeSequence seq{{start}, cyclic};
        seen[start] = 1;
        int at = start;
        for (;;) {
            int next = -1;
            for (int li : incident[at]) {
                if (used[li]) continue;
                used[li] = 1;
                next = links[li].a == at ? links[li].b : links[li].a;
                break;
            }
            if (next < 0 || next == start) break;
            seq.blocks.push_back(next);
            seen[next] = 1;
            at = next;
        }
        return seq;
    };

    // component membership to pick the deterministic start of each component
    std::vector<int> comp(static_cast<std::size_t>(l), -1);
    std::vector<std::vector<int>> members;
    for (int b = 0; b < l; ++b) {
        if (comp[b] >= 0) continue;
        const int id = static_cast<int>(members.size());
        members.emplace_back();
        std::vector<int> stack{b};
        comp[b] = id;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            members[id].push_back(x);
            for (int li : incident[x]) {
                const int y = links[li].a == x ? links[li].b : links[li].a;
                if (comp[y] < 0) {
                    comp[y] = id;
                    stack.push_back(y);
                }
            }
        }
    }

    std::vector<TypeSequence> out;
    for (auto& group : members) {
        std::sort(group.begin(), group.end());
        int start = -1;
        for (int b : group)
            if (incident[b].size() <= 1) {
                start = b;
                break;
            }
        out.push_back(start >= 0 ? walk(start, false) : walk(group.front(), true));
    }
    return out;
}

std::optional<std::vector<int>> FvsContext::find_candidate(const TypeSequence& seq, const Guess& guess) {
    const int t = static_cast<int>(seq.blocks.size());
    if (t == 0) return std::vector<int>{};

    std::vector<std::vector<int>> layer(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j) {
        const auto& block = guess.blocks[seq.blocks[j]];
        for (int p = 0; p < static_cast<int>(paths_.size()); ++p) {
            if (types_[p] != block) continue;
            const int one[] = {p};
            if (is_compatible(one, guess)) layer[j].push_back(p);
        }
        if (layer[j].empty()) return std::nullopt;
    }
    if (t == 1) return std::vector<int>{layer[0].front()};

    auto pair_ok = [&](int p, int q) {
        const int two[] = {p, q};
        return is_compatible(two, guess);
    };
    if (t == 2) {
        for (int p : layer[0])
            for (int q : layer[1])
                if (pair_ok(p, q)) return std::vector<int>{p, q};
        return std::nullopt;
    }

    // layered digraph: node (j, i) is layer[j][i]; arcs go to layer j+1 mod t
    std::vector<std::vector<std::vector<int>>> succ(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j) {
        const int nj = (j + 1) % t;
        succ[j].resize(layer[j].size());
        for (std::size_t a = 0; a < layer[j].size(); ++a)
            for (std::size_t b = 0; b < layer[nj].size(); ++b)
                if (pair_ok(layer[j][a], layer[nj][b])) succ[j][a].push_back(static_cast<int>(b));
    }

    // for every arc (u, v) with u in layer 0, a shortest v -> u distance of
    // t-1 arcs closes a cycle taking one path from every layer
    for (std::size_t u = 0; u < layer[0].size(); ++u) {
        for (int v : succ[0][u]) {
            std::vector<std::vector<int>> parent(static_cast<std::size_t>(t));
            std::vector<std::vector<int>> dist(static_cast<std::size_t>(t));
            for (int j = 0; j < t; ++j) {
                parent[j].assign(layer[j].size(), -1);
                dist[j].assign(layer[j].size(), -1);
            }
            std::queue<std::pair<int, int>> queue;
            dist[1][v] = 0;
            queue.push({1, v});
            while (!queue.empty()) {
                const auto [j, i] = queue.front();
                queue.pop();
                const int nj = (j + 1) % t;
                for (int w : succ[j][i]) {
                    if (dist[nj][w] >= 0) continue;
                    dist[nj][w] = dist[j][i] + 1;
                    parent[nj][w] = i;
                    queue.push({nj, w});
                }
            }
            if (dist[0][u] != t - 1) continue;
            std::vector<int> rho(static_cast<std::size_t>(t));
            rho[0] = layer[0][u];
            int at = parent[0][u];
            for (int j = t - 1; j >= 1; --j) {
                rho[j] = layer[j][at];
                at = parent[j][at];
            }
            return rho;
        }
    }
    return std::nullopt;
}

std::optional<GuessOutcome> FvsContext::evaluate_guess(const Guess& guess) {
    if (!screen_guess(guess)) return std::nullopt;
    std::vector<int> crossing;
    for (const auto& seq : build_type_sequences(guess)) {
        auto rho = find_candidate(seq, guess);
        if (!rho) return std::nullopt;
        crossing.insert(crossing.end(), rho->begin(), rho->end());
    }
    if (!is_compatible(crossing, guess))
        throw std::logic_error("evaluate_guess: union of candidates is not compatible");

    std::vector<std::vector<EdgeId>> removed(comps_.size());
    for (int p : crossing)
        for (EdgeId e : path_edges_[p])
            if (comp_of_edge_[e] >= 0) removed[comp_of_edge_[e]].push_back(e);

    GuessOutcome out;
    out.solution.path_indices = crossing;
    for (std::size_t c = 0; c < comps_.size(); ++c) {
        const auto packed = pack_component(static_cast<int>(c), removed[c]);
        out.solution.path_indices.insert(out.solution.path_indices.end(), packed.begin(), packed.end());
        out.guaranteed_value += opt_[c] - (comps_[c].two_external ? guess.deficit[comps_[c].d_index] : 0);
    }
    out.guaranteed_value += guess.block_count();
    std::sort(out.solution.path_indices.begin(), out.solution.path_indices.end());
    if (out.solution.size() < out.guaranteed_value)
        throw std::logic_error("evaluate_guess: assembled size " + std::to_string(out.solution.size()) +
                               " below guaranteed value " + std::to_string(out.guaranteed_value));
    return out;
}

std::uint64_t FvsContext::enumerate_realizable_guesses(const std::function<bool(const Guess&)>& visit) const {
    std::vector<std::vector<EdgeId>> types;
    for (const auto& t : types_)
        if (!t.empty()) types.push_back(t);
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());

    const int d = static_cast<int>(decomp_.d_components.size());
    std::vector<char> used(static_cast<std::size_t>(graph_.edge_count()), 0);
    std::vector<int> chosen;
    std::uint64_t visited = 0;
    bool stop = false;

    auto emit = [&] {
        Guess guess;
        for (int i : chosen) guess.blocks.push_back(types[i]);
        std::sort(guess.blocks.begin(), guess.blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        if (!obs_screen(guess)) return;
        std::vector<int> touched;
        for (int i = 0; i < d; ++i) {
            const auto& ext = decomp_.d_components[i].external_edges;
            if (used[ext[0]] || used[ext[1]]) touched.push_back(i);
        }
        if (touched.size() >= 63) throw BudgetExceeded("too many touched 2-external components");
        guess.deficit.assign(static_cast<std::size_t>(d), 0);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << touched.size()) && !stop; ++mask) {
            for (std::size_t i = 0; i < touched.size(); ++i) guess.deficit[touched[i]] = (mask >> i) & 1;
            ++visited;
            if (!visit(guess)) stop = true;
        }
    };

    auto rec = [&](auto& self, std::size_t next) -> void {
        if (stop) return;
        emit();
        for (std::size_t i = next; i < types.size() && !stop; ++i) {
            const auto& t = types[i];
            if (std::any_of(t.begin(), t.end(), [&](EdgeId e) { return used[e] != 0; })) continue;
            for (EdgeId e : t) used[e] = 1;
            chosen.push_back(static_cast<int>(i));
            self(self, i + 1);
            chosen.pop_back();
            for (EdgeId e : t) used[e] = 0;
        }
    };
    rec(rec, 0);
    return visited;
}

std::vector<ComponentInstance> split_components(const PspInstance& instance) {
    const Graph& g = instance.graph;
    const auto label = g.component_labels();
    const int count = g.component_count();
    std::vector<ComponentInstance> out(static_cast<std::size_t>(count));
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto& ids = out[label[v]].vertex_ids;
        local[v] = static_cast<int>(ids.size());
        ids.push_back(v);
    }
    std::vector<std::vector<Edge>> edges(static_cast<std::size_t>(count));
    for (const Edge& e : g.edges()) edges[label[e.u]].emplace_back(local[e.u], local[e.v]);
    for (int c = 0; c < count; ++c)
        out[c].instance.graph = Graph(static_cast<int>(out[c].vertex_ids.size()), std::move(edges[c]));
    for (std::size_t i = 0; i < instance.paths.size(); ++i) {
        const auto& p = instance.paths[i];
        if (p.vertices.empty()) continue;
        auto& ci = out[label[p.vertices.front()]];
        SimplePath q;
        for (Vertex v : p.vertices) q.vertices.push_back(local[v]);
        ci.instance.paths.push_back(std::move(q));
        ci.path_ids.push_back(static_cast<int>(i));
    }
    for (auto& ci : out) ci.instance.k = 0;
    return out;
}

FvsResult solve_fvs_delta_detailed(const PspInstance& instance, const FvsOptions& options) {
    // reject bad paths up front so errors name the original path index
    all_path_edges(instance);

    FvsResult result;
    for (const auto& piece : split_components(instance)) {
        const Graph& local = piece.instance.graph;
        const Augmented aug = augment_clique(local, choose_anchor(local));
        StructureDecomposition decomp = decompose_structure(aug.graph);

        FvsComponentReport report;
        report.vertices = local.vertex_count();
        report.paths = static_cast<int>(piece.instance.paths.size());
        report.core_edges = static_cast<int>(decomp.core_edges.size());
        report.d_components = static_cast<int>(decomp.d_components.size());
        report.t_components = static_cast<int>(decomp.t_components.size());
        report.cores = decomp.cores;
        for (const auto& core : decomp.cores)
            if (core.x_count > 2 * core.lambda - 2 || core.s_component_count > core.lambda + core.x_count - 1)
                throw std::logic_error("solve_fvs_delta: core counters exceed the feedback-edge bounds");

        const int input_core_edges = report.core_edges - 6;
        if (input_core_edges > options.max_core_edges)
            throw BudgetExceeded("fvs-delta: component has " + std::to_string(input_core_edges) +
                                 " core edges, budget is " + std::to_string(options.max_core_edges));

        if (!piece.instance.paths.empty()) {
            FvsContext ctx(aug.graph, piece.instance.paths, std::move(decomp));
            std::optional<GuessOutcome> best;
            report.guesses_evaluated = ctx.enumerate_realizable_guesses([&](const Guess& guess) {
                auto outcome = ctx.evaluate_guess(guess);
                if (outcome && (!best || outcome->solution.size() > best->solution.size())) best = std::move(outcome);
                return true;
            });
            if (!best) throw std::logic_error("solve_fvs_delta: the empty guess was not feasible");
            report.optimum = best->solution.size();
            for (int p : best->solution.path_indices) result.solution.path_indices.push_back(piece.path_ids[p]);
        }
        result.components.push_back(std::move(report));
    }
    std::sort(result.solution.path_indices.begin(), result.solution.path_indices.end());
    return result;
}

int max_input_core_edges(const PspInstance& instance) {
    int best = 0;
    for (const auto& piece : split_components(instance)) {
        const Graph& local = piece.instance.graph;
        const Augmented aug = augment_clique(local, choose_anchor(local));
        best = std::max(best, static_cast<int>(decompose_structure(aug.graph).core_edges.size()) - 6);
    }
    return best;
}

Solution solve_fvs_delta(const PspInstance& instance, const FvsOptions& options) {
    return solve_fvs_delta_detailed(instance, options).solution;
}

}  // namespace pspkit
