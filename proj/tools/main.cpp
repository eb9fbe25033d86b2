// Command-line front door: solve instances, run kernels, compute branching
// numbers, and produce the benchmark table.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "parfpt/engine.hpp"
#include "parfpt/metrics_json.hpp"
#include "parfpt/oracle.hpp"
#include "parfpt/strategies.hpp"

using namespace parfpt;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

std::vector<long long> parse_numbers(const std::string& text, std::size_t expect,
                                     const std::string& what) {
    auto parts = split(text, ',');
    if (parts.size() != expect)
        throw std::invalid_argument(what + ": expected " + std::to_string(expect) +
                                    " comma-separated values");
    std::vector<long long> out;
    for (const auto& p : parts) out.push_back(std::stoll(p));
    return out;
}

struct InputSelection {
    std::string input_path;
    std::string gnp;      // "n,p,seed"
    std::string planted;  // "n,k,seed"

    void add_flags(CLI::App* cmd) {
        auto* path = cmd->add_option("--input", input_path, "DIMACS or edge-list file");
        auto* g = cmd->add_option("--gnp", gnp, "random graph n,p,seed");
        auto* p = cmd->add_option("--planted", planted, "planted-cover instance n,k,seed");
        path->excludes(g)->excludes(p);
        g->excludes(p);
    }

    // Loads the instance; the budget k is 0 unless planted.
    Instance load() const {
        if (!input_path.empty()) {
            std::ifstream in(input_path);
            if (!in) throw std::runtime_error("cannot open " + input_path);
            return {parse_dimacs(in), 0};
        }
        if (!gnp.empty()) {
            auto parts = split(gnp, ',');
            if (parts.size() != 3) throw std::invalid_argument("--gnp: expected n,p,seed");
            return generate_instance(InstanceKind::gnp, std::stoi(parts[0]), std::stod(parts[1]),
                                     std::stoull(parts[2]));
        }
        if (!planted.empty()) {
            auto v = parse_numbers(planted, 3, "--planted");
            return generate_instance(InstanceKind::planted_vc, static_cast<int>(v[0]),
                                     static_cast<double>(v[1]), static_cast<std::uint64_t>(v[2]));
        }
        throw std::invalid_argument("no input: use --input, --gnp or --planted");
    }
};

RuleImplementation rule_by_name(const std::string& name) {
    if (name == "edge") return vc_edge_rule();
    if (name == "degree") return vc_degree_rule();
    if (name == "matching") return vc_matching_rule();
    throw std::invalid_argument("unknown rule: " + name);
}

std::optional<Cascade> cascade_by_name(const std::string& name) {
    if (name == "none") return std::nullopt;
    if (name == "buss") return Cascade({buss_kernel_spec()});
    if (name == "lp") return Cascade({lp_kernel_spec()});
    if (name == "cascade") return Cascade({buss_kernel_spec(), lp_kernel_spec()});
    throw std::invalid_argument("unknown init kernel: " + name);
}

void apply_budget(Instance& inst, int k, bool planted_default) {
    if (k < 0 && !planted_default)
        throw std::invalid_argument("--k is required unless the input is --planted");
    if (k >= 0) inst.k = k;
    if (inst.k > inst.graph.vertex_count())
        throw std::invalid_argument("k exceeds the vertex count");
}

int run_solve(const InputSelection& input, int k, const std::string& rule,
              const std::string& branch, const std::string& exec, int workers,
              const std::string& init, const std::string& interleave,
              const std::string& accounting, long long node_budget) {
    Instance inst = input.load();
    apply_budget(inst, k, !input.planted.empty());
    RunConfig cfg;
    cfg.rule = rule_by_name(rule);
    if (branch == "b1")
        cfg.branch_mode = BranchMode::b1;
    else if (branch == "bstar")
        cfg.branch_mode = BranchMode::bstar;
    else
        throw std::invalid_argument("unknown branch mode: " + branch);
    if (exec == "seq")
        cfg.exec_mode = ExecMode::sequential;
    else if (exec == "par")
        cfg.exec_mode = ExecMode::parallel;
    else
        throw std::invalid_argument("unknown exec mode: " + exec);
    cfg.worker_count = workers > 0 ? workers : std::max(1u, std::thread::hardware_concurrency());
    cfg.init_kernel = cascade_by_name(init);
    if (interleave == "buss")
        cfg.interleave_kernel = buss_kernel_spec();
    else if (interleave != "none")
        throw std::invalid_argument("unknown interleave kernel: " + interleave);
    if (accounting == "exhaustive")
        cfg.accounting = Accounting::exhaustive;
    else if (accounting == "fast")
        cfg.accounting = Accounting::fast;
    else
        throw std::invalid_argument("unknown accounting mode: " + accounting);
    if (node_budget > 0) cfg.node_budget = node_budget;

    auto [verdict, metrics] = run(cfg, inst);
    std::cout << metrics_json(verdict, metrics, inst, cfg.fingerprint()).dump() << "\n";
    return verdict.answer == Answer::yes ? 0 : 1;
}

int run_kernel(const InputSelection& input, int k, const std::string& stages) {
    Instance inst = input.load();
    apply_budget(inst, k, !input.planted.empty());
    std::vector<KernelSpec> specs;
    for (const auto& name : split(stages, ',')) {
        if (name == "buss")
            specs.push_back(buss_kernel_spec());
        else if (name == "lp")
            specs.push_back(lp_kernel_spec());
        else
            throw std::invalid_argument("unknown kernel stage: " + name);
    }
    Cascade cascade(std::move(specs));
    KernelOutcome out = cascade.apply(inst);

    // Size bounds are asserted before anything is printed.
    for (std::size_t i = 0; i < out.stages.size(); ++i) {
        const auto& spec = cascade.stages()[i];
        const auto& stage = out.stages[i];
        std::int64_t measured = spec.measure == KernelSpec::Measure::edges
                                    ? stage.out_edges
                                    : static_cast<std::int64_t>(stage.out_vertices);
        if (stage.out_size() > 0 && measured > spec.size_bound(stage.out_k))
            throw std::logic_error("kernel " + spec.name + " exceeded its size bound");
    }

    nlohmann::ordered_json j;
    j["verdict"] = out.verdict ? (*out.verdict == Answer::yes ? "yes" : "no") : "reduced";
    j["k"] = inst.k;
    j["forced"] = out.forced;
    j["discardedSize"] = out.discarded.size();
    j["finalN"] = out.reduced ? out.reduced->graph.vertex_count() : 0;
    j["finalM"] = out.reduced ? out.reduced->graph.edge_count() : 0;
    j["finalK"] = out.reduced ? out.reduced->k : inst.k - static_cast<int>(out.forced.size());
    auto stage_array = nlohmann::ordered_json::array();
    for (const auto& s : out.stages) {
        nlohmann::ordered_json stage;
        stage["name"] = s.name;
        stage["inSize"] = s.in_size();
        stage["outSize"] = s.out_size();
        stage["work"] = s.work;
        stage_array.push_back(std::move(stage));
    }
    j["stages"] = std::move(stage_array);
    std::cout << j.dump() << "\n";
    if (out.verdict && *out.verdict == Answer::no) return 1;
    return 0;
}

int run_xi(const std::vector<std::string>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("--vector required");
    BranchingFamily family;
    char buf[64];
    for (const auto& text : vectors) {
        BranchingVector d;
        for (const auto& part : split(text, ',')) d.d.push_back(std::stoi(part));
        double xi = branching_number(d);
        std::snprintf(buf, sizeof buf, "%.6f", xi);
        std::cout << "xi(" << text << ") = " << buf << "\n";
        family.vectors.push_back(std::move(d));
    }
    std::snprintf(buf, sizeof buf, "%.6f", family_branching_number(family));
    std::cout << "xi_D = " << buf << "\n";
    return 0;
}

int run_oracle(const InputSelection& input, int k) {
    Instance inst = input.load();
    apply_budget(inst, k, !input.planted.empty());
    OracleResult res = brute_force_vc(inst.graph, inst.k);
    nlohmann::ordered_json j;
    j["optimum"] = res.optimum;
    j["member"] = res.member;
    j["witness"] = res.optimal_witness;
    std::cout << j.dump() << "\n";
    return res.member ? 0 : 1;
}

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

int log2ceil(int k) {
    int b = 0;
    while ((1 << b) < std::max(1, k)) ++b;
    return b;
}

struct BenchRow {
    std::string strategy;
    std::string family;
    int n = 0;
    int k = 0;
    int seeds = 0;
    std::string status = "ok";
    int yes_count = 0;
    double median_work = 0, median_span = 0, median_tree_size = 0, median_tree_depth = 0;
    double median_wall_sec = 0;
    double xi_pow_k = 0;
    int predicted_depth = 0;
};

int run_bench(const std::string& family, int n_flag, double p, const std::string& k_range,
              int seeds, const std::string& strategies_csv, const std::string& format,
              const std::string& out_path, const std::string& exec, int workers) {
    if (seeds < 3) throw std::invalid_argument("--seeds: aggregation needs at least 3 seeds");
    auto range = split(k_range, '.');  // "a..b" splits into {a, "", b}
    if (range.size() != 3 || !range[1].empty())
        throw std::invalid_argument("--k-range: expected a..b");
    const int k_lo = std::stoi(range[0]), k_hi = std::stoi(range[2]);
    if (k_lo < 0 || k_hi < k_lo) throw std::invalid_argument("--k-range: need 0 <= a <= b");
    std::vector<std::string> strategies =
        strategies_csv == "all" ? bench_strategy_names() : split(strategies_csv, ',');
    ExecMode exec_mode = exec == "par" ? ExecMode::parallel : ExecMode::sequential;
    int worker_count = workers > 0 ? workers : std::max(1u, std::thread::hardware_concurrency());

    std::vector<BenchRow> rows;
    for (const auto& strategy : strategies) {
        for (int k = k_lo; k <= k_hi; ++k) {
            BenchRow row;
            row.strategy = strategy;
            row.family = family;
            row.k = k;
            row.seeds = seeds;
            const int n = n_flag > 0 ? n_flag : 50 * std::max(1, k);
            row.n = n;
            std::vector<double> work, span, size, depth, wall;
            for (int seed = 0; seed < seeds; ++seed) {
                try {
                    Instance inst =
                        family == "planted"
                            ? generate_instance(InstanceKind::planted_vc, n, k, seed)
                            : generate_instance(InstanceKind::gnp, n, p, seed);
                    inst.k = k;
                    auto [verdict, metrics] = run_strategy(strategy, inst, exec_mode,
                                                           worker_count, Accounting::exhaustive);
                    if (verdict.answer == Answer::yes) ++row.yes_count;
                    work.push_back(static_cast<double>(metrics.work_units));
                    span.push_back(static_cast<double>(metrics.span_units));
                    size.push_back(static_cast<double>(metrics.tree_size));
                    depth.push_back(static_cast<double>(metrics.tree_depth));
                    wall.push_back(metrics.wall_clock_sec);
                } catch (const std::exception& e) {
                    row.status = std::string("failed: ") + e.what();
                }
            }
            row.median_work = median(work);
            row.median_span = median(span);
            row.median_tree_size = median(size);
            row.median_tree_depth = median(depth);
            row.median_wall_sec = median(wall);
            if (strategy != "bussbrute") {
                const auto& fam =
                    strategy_config(strategy, exec_mode, 1, Accounting::exhaustive).rule.family;
                row.xi_pow_k = std::pow(family_branching_number(fam), k);
                row.predicted_depth = strategy.rfind("bstar-matching", 0) == 0
                                          ? log2ceil(k) + 2
                                          : predicted_depth_bound(fam, k);
            }
            rows.push_back(std::move(row));
        }
    }

    std::ostringstream body;
    if (format == "csv") {
        body << "strategy,family,n,k,seeds,status,yes,median_work,median_span,median_tree_size,"
                "median_tree_depth,median_wall_sec,xi_pow_k,predicted_depth\n";
        for (const auto& r : rows) {
            body << r.strategy << ',' << r.family << ',' << r.n << ',' << r.k << ',' << r.seeds
                 << ',' << (r.status == "ok" ? "ok" : "failed") << ',' << r.yes_count << ','
                 << r.median_work << ',' << r.median_span << ',' << r.median_tree_size << ','
                 << r.median_tree_depth << ',' << r.median_wall_sec << ',' << r.xi_pow_k << ','
                 << r.predicted_depth << "\n";
        }
    } else if (format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["strategy"] = r.strategy;
            j["family"] = r.family;
            j["n"] = r.n;
            j["k"] = r.k;
            j["seeds"] = r.seeds;
            j["status"] = r.status;
            j["yes"] = r.yes_count;
            j["medianWork"] = r.median_work;
            j["medianSpan"] = r.median_span;
            j["medianTreeSize"] = r.median_tree_size;
            j["medianTreeDepth"] = r.median_tree_depth;
            j["medianWallSec"] = r.median_wall_sec;
            j["xiPowK"] = r.xi_pow_k;
            j["predictedDepth"] = r.predicted_depth;
            arr.push_back(std::move(j));
        }
        body << arr.dump(2) << "\n";
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }

    if (out_path.empty() || out_path == "-") {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << body.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"work-efficient parallel branch-and-reduce toolkit for vertex cover"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "decide one instance and print metrics JSON");
    InputSelection solve_input;
    solve_input.add_flags(solve);
    int k = -1, workers = 0;
    long long node_budget = 0;
    std::string rule = "edge", branch = "b1", exec = "seq", init = "none", interleave = "none",
                accounting = "exhaustive";
    solve->add_option("--k", k, "budget (defaults to the planted size)");
    solve->add_option("--rule", rule, "edge|degree|matching")->capture_default_str();
    solve->add_option("--branch", branch, "b1|bstar")->capture_default_str();
    solve->add_option("--exec", exec, "seq|par")->capture_default_str();
    solve->add_option("--workers", workers, "worker threads for --exec par (0 = hardware)");
    solve->add_option("--init-kernel", init, "none|buss|lp|cascade")->capture_default_str();
    solve->add_option("--interleave", interleave, "none|buss")->capture_default_str();
    solve->add_option("--accounting", accounting, "exhaustive|fast")->capture_default_str();
    solve->add_option("--node-budget", node_budget, "abort after this many tree nodes");

    auto* kernel = app.add_subcommand("kernel", "apply a kernel cascade and print stage reports");
    InputSelection kernel_input;
    kernel_input.add_flags(kernel);
    int kernel_k = -1;
    std::string stages = "buss,lp";
    kernel->add_option("--k", kernel_k, "budget (defaults to the planted size)");
    kernel->add_option("--stages", stages, "comma-separated: buss|lp")->capture_default_str();

    auto* xi = app.add_subcommand("xi", "branching numbers of vectors and their family");
    std::vector<std::string> vectors;
    xi->add_option("--vector", vectors, "branching vector d1,d2,... (repeatable)");

    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth (n <= 24)");
    InputSelection oracle_input;
    oracle_input.add_flags(oracle);
    int oracle_k = -1;
    oracle->add_option("--k", oracle_k, "budget (defaults to the planted size)");

    auto* bench = app.add_subcommand("bench", "aggregated strategy table over seeds");
    std::string family = "planted", k_range = "4..10", strategies_csv = "all", format = "csv",
                out_path = "-", bench_exec = "seq";
    int n_flag = 0, seeds = 3, bench_workers = 0;
    double p = 0.3;
    bench->add_option("--family", family, "planted|gnp")->capture_default_str();
    bench->add_option("--n", n_flag, "vertices (0 = 50k per row for planted)");
    bench->add_option("--p", p, "edge probability for gnp")->capture_default_str();
    bench->add_option("--k-range", k_range, "a..b")->capture_default_str();
    bench->add_option("--seeds", seeds, "seeds per row (>= 3)")->capture_default_str();
    bench->add_option("--strategies", strategies_csv, "comma list or 'all'")->capture_default_str();
    bench->add_option("--format", format, "csv|json")->capture_default_str();
    bench->add_option("--out", out_path, "output path ('-' = stdout)")->capture_default_str();
    bench->add_option("--exec", bench_exec, "seq|par")->capture_default_str();
    bench->add_option("--workers", bench_workers, "workers for --exec par");

    try {
        app.parse(argc, argv);
        if (solve->parsed())
            return run_solve(solve_input, k, rule, branch, exec, workers, init, interleave,
                             accounting, node_budget);
        if (kernel->parsed()) return run_kernel(kernel_input, kernel_k, stages);
        if (xi->parsed()) return run_xi(vectors);
        if (oracle->parsed()) return run_oracle(oracle_input, oracle_k);
        if (bench->parsed())
            return run_bench(family, n_flag, p, k_range, seeds, strategies_csv, format, out_path,
                             bench_exec, bench_workers);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits cleanly, flag errors do not
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
