#ifndef BRP_BENCH_HPP
#define BRP_BENCH_HPP

/*
    Batch benchmarking over a manifest of instances.  Every (instance,
    algorithm) pair becomes one CSV row; summaries (average reshuffles,
    average time, wins per algorithm) are recomputed from the rows, never
    kept as separate state.  Timing starts after instance parsing.
*/

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "brp/bounds.hpp"
#include "brp/policies.hpp"

namespace brp {

struct AlgoSpec {
    enum class Kind { Greedy, Bbs, Exact };

    std::string name;  // as given: bbs, exact, greedy:<policy>
    Kind kind = Kind::Bbs;
    PolicyId policy = PolicyId::MinMax;  // greedy only
};

// Accepts `bbs`, `exact`, `greedy:<policy>`.
std::optional<AlgoSpec> parse_algo(const std::string& spec);

struct BenchRecord {
    enum class Status { Ok, Timeout, Infeasible, Error };

    std::string instance;
    int width = 0;
    int height = 0;
    int blocks = 0;
    std::string algorithm;
    long long reshuffles = -1;  // -1 when no solution was produced
    double time_s = 0.0;
    Status status = Status::Error;
    long long lb = -1;
    std::optional<bool> optimal;  // only when an exact reference is available
};

struct BenchOptions {
    std::filesystem::path manifest;
    std::vector<AlgoSpec> algos;
    double time_limit = 1.0;
    int parallel = 1;
    bool exact_reference = false;
    double exact_time_limit = 10.0;
    LbKind lb_kind = LbKind::Ubalb;
};

// Rows come back instance-major in manifest order, algorithms in the
// order given; identical regardless of `parallel` (timings aside).
std::vector<BenchRecord> run_bench(const BenchOptions& opts);

// Header: instance,w,h,n,algorithm,reshuffles,time_s,status,lb,optimal
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

// Per-(w,h,n) group: average reshuffles and time per algorithm plus the
// number of instances on which it ties the per-instance best.
std::string summarize(const std::vector<BenchRecord>& records);

}  // namespace brp

#endif
