#include "brp/bench.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "brp/beam.hpp"
#include "brp/exact.hpp"
#include "brp/instance_io.hpp"

namespace brp {

namespace {

using Clock = std::chrono::steady_clock;

const char* status_name(BenchRecord::Status s) {
    switch (s) {
        case BenchRecord::Status::Ok: return "ok";
        case BenchRecord::Status::Timeout: return "timeout";
        case BenchRecord::Status::Infeasible: return "infeasible";
        case BenchRecord::Status::Error: return "error";
    }
    return "?";
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// All rows for one instance, in the options' algorithm order.
void bench_instance(const BenchOptions& opts, const ManifestEntry& entry,
                    const std::filesystem::path& base, std::vector<BenchRecord>& rows) {
    BenchRecord proto;
    proto.instance = entry.id;
    proto.width = entry.width;
    proto.height = entry.height;
    proto.blocks = entry.blocks;

    Yard yard;
    bool loaded = false;
    try {
        yard = read_instance_file(base / entry.path).first;
        loaded = true;
        proto.lb = bound_total(yard, opts.lb_kind);
    } catch (const InfeasibleError&) {
        proto.status = BenchRecord::Status::Infeasible;
    } catch (const std::exception&) {
        proto.status = BenchRecord::Status::Error;
    }

    std::optional<long long> reference;
    if (loaded && proto.lb >= 0 && opts.exact_reference) {
        ExactResult ref = solve_exact(yard, opts.lb_kind, opts.exact_time_limit);
        if (ref.status == ExactStatus::Optimal) reference = ref.best->reshuffles;
    }

    for (const AlgoSpec& algo : opts.algos) {
        BenchRecord rec = proto;
        rec.algorithm = algo.name;
        if (loaded && proto.lb >= 0) {
            const auto t0 = Clock::now();
            switch (algo.kind) {
                case AlgoSpec::Kind::Greedy: {
                    Playout po = playout(algo.policy, yard);
                    rec.time_s = seconds_since(t0);
                    if (po.completed) {
                        rec.status = BenchRecord::Status::Ok;
                        rec.reshuffles = po.reshuffles;
                    } else {
                        rec.status = BenchRecord::Status::Infeasible;
                    }
                    break;
                }
                case AlgoSpec::Kind::Bbs: {
                    BeamConfig config;
                    config.time_limit = opts.time_limit;
                    config.lb_kind = opts.lb_kind;
                    Solution sol = solve_bbs(yard, config);
                    rec.time_s = sol.elapsed;
                    if (sol.feasible) {
                        rec.status = BenchRecord::Status::Ok;
                        rec.reshuffles = sol.reshuffles;
                    } else {
                        rec.status = BenchRecord::Status::Infeasible;
                    }
                    break;
                }
                case AlgoSpec::Kind::Exact: {
                    ExactResult res = solve_exact(yard, opts.lb_kind, opts.time_limit);
                    rec.time_s = seconds_since(t0);
                    if (res.status == ExactStatus::Optimal) {
                        rec.status = BenchRecord::Status::Ok;
                        rec.reshuffles = res.best->reshuffles;
                    } else if (res.status == ExactStatus::Infeasible) {
                        rec.status = BenchRecord::Status::Infeasible;
                    } else {
                        rec.status = BenchRecord::Status::Timeout;
                        if (res.best) rec.reshuffles = res.best->reshuffles;
                    }
                    break;
                }
            }
            if (reference && rec.reshuffles >= 0)
                rec.optimal = rec.reshuffles == *reference;
        }
        rows.push_back(std::move(rec));
    }
}

}  // namespace

std::optional<AlgoSpec> parse_algo(const std::string& spec) {
    if (spec == "bbs") return AlgoSpec{spec, AlgoSpec::Kind::Bbs, PolicyId::MinMax};
    if (spec == "exact") return AlgoSpec{spec, AlgoSpec::Kind::Exact, PolicyId::MinMax};
    constexpr std::string_view prefix = "greedy:";
    if (spec.rfind(prefix, 0) == 0) {
        auto policy = policy_from_string(spec.substr(prefix.size()));
        if (policy) return AlgoSpec{spec, AlgoSpec::Kind::Greedy, *policy};
    }
    return std::nullopt;
}

std::vector<BenchRecord> run_bench(const BenchOptions& opts) {
    const std::vector<ManifestEntry> entries = read_manifest(opts.manifest);
    const std::filesystem::path base = opts.manifest.parent_path();
    const int algos = static_cast<int>(opts.algos.size());

    std::vector<std::vector<BenchRecord>> per_instance(entries.size());
    const int workers = std::max(1, opts.parallel);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= entries.size()) return;
            per_instance[i].reserve(algos);
            bench_instance(opts, entries[i], base, per_instance[i]);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::vector<BenchRecord> rows;
    rows.reserve(entries.size() * algos);
    for (auto& group : per_instance)
        for (auto& rec : group) rows.push_back(std::move(rec));
    return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "instance,w,h,n,algorithm,reshuffles,time_s,status,lb,optimal\n";
    for (const BenchRecord& r : records) {
        out << r.instance << ',' << r.width << ',' << r.height << ',' << r.blocks << ','
            << r.algorithm << ',' << r.reshuffles << ',' << std::fixed << std::setprecision(6)
            << r.time_s << ',' << status_name(r.status) << ',' << r.lb << ',';
        if (r.optimal) out << (*r.optimal ? 1 : 0);
        out << '\n';
    }
}

std::string summarize(const std::vector<BenchRecord>& records) {
    struct Cell {
        long long count = 0, ok = 0, wins = 0, resh = 0;
        double time = 0.0;
        long long opt_known = 0, opt_hit = 0;
    };
    using GroupKey = std::tuple<int, int, int>;
    std::map<GroupKey, std::map<std::string, Cell>> groups;
    std::vector<std::string> algo_order;

    std::map<std::string, std::vector<const BenchRecord*>> by_instance;
    for (const BenchRecord& r : records) {
        by_instance[r.instance].push_back(&r);
        if (std::find(algo_order.begin(), algo_order.end(), r.algorithm) == algo_order.end())
            algo_order.push_back(r.algorithm);
    }

    for (auto& [id, rows] : by_instance) {
        long long best = -1;
        for (const BenchRecord* r : rows)
            if (r->status == BenchRecord::Status::Ok && (best < 0 || r->reshuffles < best))
                best = r->reshuffles;
        for (const BenchRecord* r : rows) {
            Cell& cell = groups[{r->width, r->height, r->blocks}][r->algorithm];
            ++cell.count;
            cell.time += r->time_s;
            if (r->status == BenchRecord::Status::Ok) {
                ++cell.ok;
                cell.resh += r->reshuffles;
                if (best >= 0 && r->reshuffles == best) ++cell.wins;  // ties all credited
            }
            if (r->optimal) {
                ++cell.opt_known;
                if (*r->optimal) ++cell.opt_hit;
            }
        }
    }

    std::ostringstream out;
    out << std::fixed;
    std::map<std::string, long long> total_wins;
    for (const auto& [key, cells] : groups) {
        auto [w, h, n] = key;
        out << "group w=" << w << " h=" << h << " n=" << n << '\n';
        for (const std::string& algo : algo_order) {
            auto it = cells.find(algo);
            if (it == cells.end()) continue;
            const Cell& c = it->second;
            out << "  " << std::left << std::setw(24) << algo << std::right;
            if (c.ok > 0)
                out << " resh " << std::setprecision(2) << std::setw(10)
                    << static_cast<double>(c.resh) / c.ok;
            else
                out << " resh " << std::setw(10) << "-";
            out << "  time " << std::setprecision(3) << std::setw(8) << c.time / c.count;
            out << "  wins " << std::setw(6) << c.wins;
            if (c.opt_known > 0) out << "  opt " << c.opt_hit << '/' << c.opt_known;
            out << '\n';
            total_wins[algo] += c.wins;
        }
    }
    out << "wins total\n";
    for (const std::string& algo : algo_order)
        out << "  " << std::left << std::setw(24) << algo << std::right << ' '
            << total_wins[algo] << '\n';
    return out.str();
}

}  // namespace brp
