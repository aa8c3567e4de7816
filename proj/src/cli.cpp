#include "pspkit/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pspkit/errors.hpp"
#include "pspkit/mcc.hpp"
#include "pspkit/oracle.hpp"
#include "pspkit/psp_io.hpp"
#include "pspkit/random_gen.hpp"
#include "pspkit/reductions.hpp"
#include "pspkit/solve.hpp"
#include "pspkit/tree_decomposition.hpp"

namespace pspkit {

namespace {

namespace fs = std::filesystem;

// Raised by command bodies to leave with a specific exit code.
struct CliExit {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliExit{kExitParse, "cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <class F>
auto parse_file(const std::string& path, F&& parser) {
    const std::string text = read_file(path);
    try {
        return parser(text);
    } catch (const ParseError& e) {
        throw CliExit{kExitParse, path + ": " + e.what()};
    } catch (const std::invalid_argument& e) {
        throw CliExit{kExitParse, path + ": " + e.what()};
    }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CliExit{kExitParse, "cannot write " + path};
    f << text;
}

std::string or_dash(int value) { return value < 0 ? "-" : std::to_string(value); }

std::string format_ms(double ms) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << ms;
    return s.str();
}

struct SolveArgs {
    std::string input;
    std::string algo = "auto";
    int k = -1;
    std::string decomposition;
    std::string out;
    int budget_core_edges = 14;
    int max_width = 22;
    int max_paths = 30;
};

SolveOptions make_options(const std::string& algo_name, int budget, int width, int paths) {
    SolveOptions options;
    auto algo = parse_algorithm(algo_name);
    if (!algo) throw CliExit{kExitParse, "unknown algorithm '" + algo_name + "'"};
    options.algorithm = *algo;
    options.budget_core_edges = budget;
    options.max_width = width;
    options.bruteforce_max_paths = paths;
    return options;
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    PspInstance instance = parse_file(a.input, [](const std::string& t) { return parse_psp_string(t); });
    if (a.k >= 0) instance.k = a.k;
    SolveOptions options = make_options(a.algo, a.budget_core_edges, a.max_width, a.max_paths);
    if (!a.decomposition.empty())
        options.decomposition =
            parse_file(a.decomposition, [](const std::string& t) { return parse_decomposition_string(t); });

    const RunReport report = solve_instance(instance, options);
    const Verdict verdict = verify_solution(instance, report.solution);
    if (!verdict.valid) throw CliExit{kExitSelfCheck, "internal error: solver output failed verification: " + verdict.reason};

    if (!a.out.empty()) emit(a.out, serialize_solution(report.solution), out);
    const std::string decision = verdict.meets_k ? "YES" : "NO";
    const std::string algo = algorithm_name(report.algorithm);
    out << "algorithm: " << algo << '\n'
        << "instance: " << report.digest << '\n'
        << "optimum: " << report.optimum() << '\n'
        << "k: " << instance.k << '\n'
        << "decision: " << decision << '\n'
        << "lambda: " << report.lambda << '\n'
        << "max_degree: " << report.max_degree << '\n'
        << "max_length: " << report.max_length << '\n'
        << "core_edges: " << or_dash(report.core_edges) << '\n'
        << "width: " << or_dash(report.width) << '\n'
        << "conflict_width: " << or_dash(report.conflict_width) << '\n'
        << "wall_ms: " << format_ms(report.wall_ms) << '\n'
        << "solution_file: " << (a.out.empty() ? "-" : a.out) << '\n'
        << "paths:";
    for (int p : report.solution.path_indices) out << ' ' << p;
    out << '\n'
        << "summary algo=" << algo << " digest=" << report.digest << " optimum=" << report.optimum()
        << " k=" << instance.k << " decision=" << decision << " lambda=" << report.lambda
        << " delta=" << report.max_degree << " r=" << report.max_length
        << " core_edges=" << or_dash(report.core_edges) << " width=" << or_dash(report.width)
        << " conflict_width=" << or_dash(report.conflict_width) << " wall_ms=" << format_ms(report.wall_ms)
        << " solution=" << (a.out.empty() ? "-" : a.out) << '\n';
    return kExitOk;
}

struct GenerateArgs {
    std::string kind;
    std::string mcc_file;
    int groups = 2, group_size = 2;
    double density = 0.5;
    std::uint64_t seed = 1;
    RandomParams random;
    std::string out;
    std::string witness;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
    if (a.kind == "random") {
        RandomParams params = a.random;
        params.seed = a.seed;
        PspInstance instance;
        try {
            instance = gen_random(params);
        } catch (const std::invalid_argument& e) {
            throw CliExit{kExitParse, e.what()};
        }
        emit(a.out, serialize_psp(instance), out);
        return kExitOk;
    }
    if (a.kind != "mcc-vc" && a.kind != "mcc-pw") throw CliExit{kExitParse, "unknown kind '" + a.kind + "'"};
    if (!a.witness.empty() && a.kind != "mcc-pw") throw CliExit{kExitParse, "--emit-witness applies to mcc-pw only"};

    MccInstance mcc;
    if (!a.mcc_file.empty()) {
        mcc = parse_file(a.mcc_file, [](const std::string& t) { return parse_mcc_string(t); });
    } else {
        if (a.groups < 2 || a.group_size < 2 || a.density < 0 || a.density > 1)
            throw CliExit{kExitParse, "need --groups >= 2, --group-size >= 2 and --density in [0,1]"};
        mcc = random_mcc(a.groups, a.group_size, a.density, a.seed);
    }
    ReductionOutput red;
    try {
        red = a.kind == "mcc-vc" ? reduce_mcc_vc(mcc) : reduce_mcc_pw(mcc);
    } catch (const std::invalid_argument& e) {
        throw CliExit{kExitParse, e.what()};
    }
    emit(a.out, serialize_psp(red.instance), out);
    if (!a.witness.empty()) emit(a.witness, serialize_decomposition(pw_witness(mcc)), out);
    // the instance may be on stdout, so the target goes to stderr
    (a.out.empty() || a.out == "-" ? err : out) << "target: " << red.target << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& solution, const std::string& decomposition,
               std::ostream& out, std::ostream& err) {
    if (solution.empty() == decomposition.empty())
        throw CliExit{kExitParse, "verify needs exactly one of --solution or --decomposition"};
    const PspInstance instance = parse_file(input, [](const std::string& t) { return parse_psp_string(t); });
    if (!solution.empty()) {
        const Solution sol = parse_file(solution, [](const std::string& t) { return parse_solution_string(t); });
        const Verdict v = verify_solution(instance, sol);
        if (!v.valid) {
            err << "invalid solution: " << v.reason << '\n';
            return kExitInvalid;
        }
        if (!v.meets_k) {
            err << "solution has " << v.size << " paths, fewer than k = " << instance.k << '\n';
            return kExitInvalid;
        }
        out << "valid solution of size " << v.size << " (k = " << instance.k << ")\n";
        return kExitOk;
    }
    const TreeDecomposition dec =
        parse_file(decomposition, [](const std::string& t) { return parse_decomposition_string(t); });
    if (auto problem = decomposition_error(instance.graph, dec)) {
        err << "invalid decomposition: " << *problem << '\n';
        return kExitInvalid;
    }
    out << "valid decomposition of width " << dec.width() << " with " << dec.bags.size() << " bags\n";
    return kExitOk;
}

struct BenchArgs {
    std::string corpus;
    std::string algos = "auto,bruteforce";
    int repetitions = 1;
    std::string out;
    int budget_core_edges = 14;
    int max_width = 22;
    int max_paths = 30;
};

struct BenchRow {
    std::string algo;
    int size = 0;
    double wall_ms = 0;
    int lambda = 0, delta = 0, r = 0;
};

int worker_count(std::size_t jobs) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("PSPKIT_THREADS")) {
        const int v = std::atoi(cap);
        if (v >= 1) hw = std::min(hw, static_cast<unsigned>(v));
    }
    return static_cast<int>(std::min<std::size_t>(hw, std::max<std::size_t>(jobs, 1)));
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
    if (!fs::is_directory(a.corpus)) throw CliExit{kExitParse, "corpus " + a.corpus + " is not a directory"};
    if (a.repetitions < 1) throw CliExit{kExitParse, "--repetitions must be >= 1"};
    std::vector<std::string> algos;
    {
        std::stringstream ss(a.algos);
        for (std::string item; std::getline(ss, item, ',');)
            if (!item.empty()) {
                if (!parse_algorithm(item)) throw CliExit{kExitParse, "unknown algorithm '" + item + "'"};
                algos.push_back(item);
            }
    }
    if (algos.empty()) throw CliExit{kExitParse, "--algos is empty"};

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(a.corpus))
        if (entry.is_regular_file() && entry.path().extension() == ".psp") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    // per instance: rows, or the first failure
    struct Outcome {
        std::vector<BenchRow> rows;
        std::optional<CliExit> failure;
    };
    std::vector<Outcome> results(files.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            Outcome& o = results[i];
            try {
                const PspInstance instance =
                    parse_file(files[i].string(), [](const std::string& t) { return parse_psp_string(t); });
                for (const auto& name : algos) {
                    const SolveOptions options = make_options(name, a.budget_core_edges, a.max_width, a.max_paths);
                    RunReport best;
                    for (int rep = 0; rep < a.repetitions; ++rep) {
                        RunReport report = solve_instance(instance, options);
                        if (rep == 0 || report.wall_ms < best.wall_ms) best = std::move(report);
                    }
                    const Verdict v = verify_solution(instance, best.solution);
                    if (!v.valid)
                        throw CliExit{kExitSelfCheck, files[i].filename().string() + ": " + name +
                                                          " produced an invalid packing: " + v.reason};
                    o.rows.push_back({name, best.optimum(), best.wall_ms, best.lambda, best.max_degree, best.max_length});
                }
            } catch (const CliExit& e) {
                o.failure = e;
            } catch (const BudgetExceeded& e) {
                o.failure = CliExit{kExitBudget, files[i].filename().string() + ": " + e.what()};
            } catch (const Inapplicable& e) {
                o.failure = CliExit{kExitInapplicable, files[i].filename().string() + ": " + e.what()};
            }
        }
    };
    std::vector<std::thread> pool;
    const int workers = worker_count(files.size());
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << "instance,algo,size,wall_ms,lambda,delta,r\n";
    int code = kExitOk;
    for (std::size_t i = 0; i < files.size() && code == kExitOk; ++i) {
        const auto& o = results[i];
        const std::string name = files[i].filename().string();
        for (const auto& row : o.rows)
            csv << name << ',' << row.algo << ',' << row.size << ',' << format_ms(row.wall_ms) << ',' << row.lambda
                << ',' << row.delta << ',' << row.r << '\n';
        if (o.failure) {
            err << o.failure->message << '\n';
            code = o.failure->code;
            break;
        }
        for (const auto& row : o.rows)
            if (row.size != o.rows.front().size) {
                err << "size mismatch on " << name << ": " << o.rows.front().algo << " found "
                    << o.rows.front().size << ", " << row.algo << " found " << row.size << '\n';
                code = kExitBenchMismatch;
                break;
            }
    }
    emit(a.out, csv.str(), out);
    return code;
}

int cmd_conflict(const std::string& input, const std::string& path, std::ostream& out) {
    const PspInstance instance = parse_file(input, [](const std::string& t) { return parse_psp_string(t); });
    emit(path, serialize_dimacs(build_conflict_graph(instance)), out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Path set packing solvers, instance generators and verifiers", "pspkit"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Compute a maximum packing of edge-disjoint paths");
    s->add_option("input", solve.input, "Instance file (PSP format)")->required();
    s->add_option("--algo", solve.algo, "auto, bruteforce, tree, fvs-delta or tw-conflict");
    s->add_option("--k", solve.k, "Override the instance's threshold k");
    s->add_option("--decomposition", solve.decomposition, "Tree decomposition of G (PACE td) for tw-conflict");
    s->add_option("--out", solve.out, "Write the solution here");
    s->add_option("--budget-core-edges", solve.budget_core_edges, "Core-edge guard for fvs-delta");
    s->add_option("--max-width", solve.max_width, "Width guard for tw-conflict");
    s->add_option("--max-paths", solve.max_paths, "Path-count guard for bruteforce");

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Write a generated instance");
    g->add_option("kind", gen.kind, "mcc-vc, mcc-pw or random")->required();
    g->add_option("--mcc", gen.mcc_file, "Multicolored-clique input (otherwise random)");
    g->add_option("--groups", gen.groups, "Random MCC: number of groups k");
    g->add_option("--group-size", gen.group_size, "Random MCC: vertices per group n");
    g->add_option("--density", gen.density, "Random MCC: probability of each cross-group edge");
    g->add_option("--seed", gen.seed, "Random seed");
    g->add_option("--vertices", gen.random.n, "Random instance: vertex count");
    g->add_option("--extra-edges", gen.random.extra_edges, "Random instance: edges beyond the spanning forest");
    g->add_option("--paths", gen.random.path_count, "Random instance: number of paths");
    g->add_option("--max-len", gen.random.max_len, "Random instance: maximum edges per path");
    g->add_option("--max-degree", gen.random.max_degree, "Random instance: degree cap (0 = none)");
    g->add_option("--components", gen.random.components, "Random instance: trees in the spanning forest");
    g->add_option("--k", gen.random.k, "Random instance: threshold k");
    g->add_option("--out", gen.out, "Output file (default stdout)");
    g->add_option("--emit-witness", gen.witness, "mcc-pw: also write the path decomposition here");

    std::string v_input, v_solution, v_decomposition;
    auto* v = app.add_subcommand("verify", "Check a solution or a decomposition against an instance");
    v->add_option("input", v_input, "Instance file")->required();
    v->add_option("--solution", v_solution, "Solution file");
    v->add_option("--decomposition", v_decomposition, "Tree decomposition of G (PACE td)");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Run algorithms over a corpus and cross-check their sizes");
    b->add_option("corpus", bench.corpus, "Directory of .psp files")->required();
    b->add_option("--algos", bench.algos, "Comma-separated algorithm list");
    b->add_option("--repetitions", bench.repetitions, "Runs per instance and algorithm (fastest is reported)");
    b->add_option("--out", bench.out, "CSV output file (default stdout)");
    b->add_option("--budget-core-edges", bench.budget_core_edges, "Core-edge guard for fvs-delta");
    b->add_option("--max-width", bench.max_width, "Width guard for tw-conflict");
    b->add_option("--max-paths", bench.max_paths, "Path-count guard for bruteforce");

    std::string c_input, c_out;
    auto* c = app.add_subcommand("conflict", "Export the conflict graph in DIMACS edge format");
    c->add_option("input", c_input, "Instance file")->required();
    c->add_option("--out", c_out, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitParse;
    }

    try {
        if (*s) return cmd_solve(solve, out);
        if (*g) return cmd_generate(gen, out, err);
        if (*v) return cmd_verify(v_input, v_solution, v_decomposition, out, err);
        if (*b) return cmd_bench(bench, out, err);
        if (*c) return cmd_conflict(c_input, c_out, out);
    } catch (const CliExit& e) {
        err << e.message << '\n';
        return e.code;
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kExitParse;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const Inapplicable& e) {
        err << "not applicable: " << e.what() << '\n';
        return kExitInapplicable;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitParse;
}

}  // namespace pspkit
