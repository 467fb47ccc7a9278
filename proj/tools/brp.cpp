// Command-line front end: bound computation, solving, instance
// generation, and batch benchmarking.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 infeasible instance.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "brp/beam.hpp"
#include "brp/bench.hpp"
#include "brp/bounds.hpp"
#include "brp/exact.hpp"
#include "brp/instance_io.hpp"
#include "brp/policies.hpp"
#include "brp/yard.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;

brp::LbKind lb_kind_from(const std::string& name) {
    if (name == "lb1") return brp::LbKind::Lb1;
    if (name == "lb3") return brp::LbKind::Lb3;
    if (name == "ubalb") return brp::LbKind::Ubalb;
    throw CLI::ValidationError("--lb", "unknown bound: " + name);
}

void print_moves(const std::vector<brp::Move>& moves) {
    for (const brp::Move& m : moves) {
        if (m.kind == brp::Move::Kind::Reshuffle)
            std::cout << "R " << m.block << ' ' << m.from << ' ' << m.to << '\n';
        else
            std::cout << "T " << m.block << ' ' << m.from << '\n';
    }
}

int cmd_bound(const std::string& file, const std::string& method) {
    auto yard = brp::read_instance_file(file).first;
    brp::BoundBreakdown breakdown;
    if (method == "lb1")
        breakdown = brp::compute_bound(yard, brp::LbKind::Lb1);
    else if (method == "lb3")
        breakdown = brp::lb3(yard);
    else if (method == "ubalb")
        breakdown = brp::lb_ubalb(yard);
    else if (method == "lb4-bf")
        breakdown = brp::lb4_bruteforce(yard);
    else
        throw CLI::ValidationError("--method", "unknown bound: " + method);

    std::cout << "method " << method << "\ntotal " << breakdown.total << '\n';
    for (const auto& step : breakdown.per_step)
        std::cout << "step target=" << step.target << " blockers=" << step.blockers
                  << " g=" << step.relax_term << '\n';
    return kExitOk;
}

int cmd_solve(const std::string& file, const std::string& algo, double time_limit,
              const std::string& beta, const std::string& ub, const std::string& lb,
              bool emit_moves) {
    auto yard = brp::read_instance_file(file).first;
    const brp::LbKind lb_kind = lb_kind_from(lb);

    long long reshuffles = -1;
    double elapsed = 0.0;
    bool proven = false;
    std::vector<brp::Move> moves;

    if (algo == "bbs") {
        brp::BeamConfig config;
        config.time_limit = time_limit;
        config.lb_kind = lb_kind;
        if (beta != "auto") {
            try {
                config.beta = std::stoi(beta);
            } catch (const std::exception&) {
                throw CLI::ValidationError("--beta", "expected `auto` or a positive integer");
            }
        }
        if (ub != "auto") {
            auto policy = brp::policy_from_string(ub);
            if (!policy) throw CLI::ValidationError("--ub", "unknown policy: " + ub);
            config.ub_policy = *policy;
        }
        brp::Solution sol = brp::solve_bbs(yard, config);
        if (!sol.feasible) {
            std::cout << "status infeasible\n";
            return kExitInfeasible;
        }
        reshuffles = sol.reshuffles;
        elapsed = sol.elapsed;
        proven = sol.proven_optimal;
        moves = std::move(sol.moves);
    } else if (algo == "exact") {
        brp::ExactResult res = brp::solve_exact(yard, lb_kind, time_limit);
        if (res.status == brp::ExactStatus::Infeasible) {
            std::cout << "status infeasible\n";
            return kExitInfeasible;
        }
        if (!res.best) {
            std::cout << "status timeout\n";
            return kExitInfeasible;
        }
        reshuffles = res.best->reshuffles;
        elapsed = res.best->elapsed;
        proven = res.status == brp::ExactStatus::Optimal;
        moves = std::move(res.best->moves);
    } else if (algo.rfind("greedy:", 0) == 0) {
        auto policy = brp::policy_from_string(algo.substr(7));
        if (!policy) throw CLI::ValidationError("--algo", "unknown policy: " + algo.substr(7));
        const auto t0 = std::chrono::steady_clock::now();
        brp::Playout po = brp::playout(*policy, yard);
        elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!po.completed) {
            std::cout << "status infeasible\n";
            return kExitInfeasible;
        }
        reshuffles = po.reshuffles;
        moves = std::move(po.moves);
    } else {
        throw CLI::ValidationError("--algo", "expected bbs, exact or greedy:<policy>");
    }

    std::cout << "status ok\nreshuffles " << reshuffles << "\ntime_s " << std::fixed
              << std::setprecision(4) << elapsed << "\nproven_optimal "
              << (proven ? "true" : "false") << '\n';
    if (emit_moves) print_moves(moves);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted block relocation solver toolkit"};
    app.require_subcommand(1);

    // bound
    std::string bound_file, bound_method = "ubalb";
    auto* bound = app.add_subcommand("bound", "Compute a reshuffle lower bound");
    bound->add_option("file", bound_file, "instance file")->required();
    bound->add_option("--method", bound_method, "lb1 | lb3 | ubalb | lb4-bf")
        ->default_val("ubalb");

    // solve
    std::string solve_file, solve_algo = "bbs", solve_beta = "auto", solve_ub = "auto",
                solve_lb = "ubalb";
    double solve_limit = 1.0;
    bool emit_moves = false;
    auto* solve = app.add_subcommand("solve", "Solve an instance");
    solve->add_option("file", solve_file, "instance file")->required();
    solve->add_option("--algo", solve_algo, "bbs | greedy:<policy> | exact")->default_val("bbs");
    solve->add_option("--time-limit", solve_limit, "seconds")->default_val(1.0);
    solve->add_option("--beta", solve_beta, "auto or a beam width")->default_val("auto");
    solve->add_option("--ub", solve_ub, "auto or a playout policy")->default_val("auto");
    solve->add_option("--lb", solve_lb, "ubalb | lb3 | lb1")->default_val("ubalb");
    solve->add_flag("--emit-moves", emit_moves, "print one move per line");

    // generate
    int gen_w = 0, gen_h = 0, gen_n = 0, gen_count = 1, gen_per_config = 100;
    std::uint64_t gen_seed = 0;
    std::string gen_out = ".";
    bool gen_lbri = false;
    auto* gen = app.add_subcommand("generate", "Generate instances and a manifest");
    gen->set_help_flag("--help", "print help");  // frees -h for the height flag
    gen->add_option("--w", gen_w, "stacks");
    gen->add_option("--h", gen_h, "slots per stack");
    gen->add_option("--n", gen_n, "blocks");
    gen->add_option("--count", gen_count, "instances to generate")->default_val(1);
    gen->add_option("--seed", gen_seed, "generator seed")->default_val(0);
    gen->add_option("--out-dir", gen_out, "output directory")->required();
    gen->add_flag("--lbri", gen_lbri, "emit the full large-instance grid");
    gen->add_option("--count-per-config", gen_per_config, "instances per (w,h,n) triple")
        ->default_val(100);

    // bench
    std::string bench_manifest, bench_algos = "bbs", bench_out = "results.csv";
    double bench_limit = 1.0, bench_exact_limit = 10.0;
    int bench_parallel = 1;
    bool bench_exact_ref = false;
    auto* bench = app.add_subcommand("bench", "Benchmark algorithms over a manifest");
    bench->add_option("--manifest", bench_manifest, "manifest file")->required();
    bench->add_option("--algos", bench_algos, "comma-separated algorithm list")
        ->default_val("bbs");
    bench->add_option("--time-limit", bench_limit, "seconds per run")->default_val(1.0);
    bench->add_option("--out", bench_out, "CSV output path")->default_val("results.csv");
    bench->add_option("--parallel", bench_parallel, "worker threads")->default_val(1);
    bench->add_flag("--exact-reference", bench_exact_ref, "add an exact optimum column");
    bench->add_option("--exact-time-limit", bench_exact_limit, "seconds for the reference")
        ->default_val(10.0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (bound->parsed()) return cmd_bound(bound_file, bound_method);

        if (solve->parsed())
            return cmd_solve(solve_file, solve_algo, solve_limit, solve_beta, solve_ub, solve_lb,
                             emit_moves);

        if (gen->parsed()) {
            std::vector<brp::ManifestEntry> entries;
            if (gen_lbri) {
                entries = brp::generate_lbri(gen_out, gen_per_config, gen_seed);
            } else {
                if (gen_w < 1 || gen_h < 1)
                    throw CLI::ValidationError("generate", "--w and --h are required");
                entries = brp::generate_dataset(gen_out, gen_w, gen_h, gen_n, gen_count, gen_seed);
            }
            std::cout << "instances " << entries.size() << "\nmanifest "
                      << (std::filesystem::path(gen_out) / "manifest.tsv").string() << '\n';
            return kExitOk;
        }

        if (bench->parsed()) {
            brp::BenchOptions opts;
            opts.manifest = bench_manifest;
            opts.time_limit = bench_limit;
            opts.parallel = bench_parallel;
            opts.exact_reference = bench_exact_ref;
            opts.exact_time_limit = bench_exact_limit;
            std::string token;
            std::istringstream list(bench_algos);
            while (std::getline(list, token, ',')) {
                if (token.empty()) continue;
                auto spec = brp::parse_algo(token);
                if (!spec) throw CLI::ValidationError("--algos", "unknown algorithm: " + token);
                opts.algos.push_back(*spec);
            }
            if (opts.algos.empty())
                throw CLI::ValidationError("--algos", "at least one algorithm required");

            auto records = brp::run_bench(opts);
            std::ofstream csv(bench_out);
            if (!csv) throw std::runtime_error("cannot write " + bench_out);
            brp::write_csv(csv, records);
            std::cout << brp::summarize(records);
            std::cout << "csv " << bench_out << '\n';
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const brp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const brp::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
