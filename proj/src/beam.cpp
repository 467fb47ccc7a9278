#include "brp/beam.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "sim.hpp"

namespace brp {

int schedule_beta(int block_count) {
    if (block_count < 0) throw std::invalid_argument("schedule_beta: negative block count");
    if (block_count < 40) return 800;
    if (block_count < 60) return 500;
    if (block_count < 80) return 300;
    if (block_count < 100) return 200;
    if (block_count < 120) return 100;
    return 50;
}

PolicyId schedule_policy(int block_count) {
    if (block_count < 0) throw std::invalid_argument("schedule_policy: negative block count");
    if (block_count < 1000) return PolicyId::Lookahead1;
    if (block_count < 10000) return PolicyId::Difference1;
    return PolicyId::GroupAssign;
}

namespace {

using Clock = std::chrono::steady_clock;

struct TraceRec {
    int parent;               // -1 for the root
    std::vector<Move> moves;  // moves that created this node from its parent
};

struct Candidate {
    Yard yard;  // post-retrieval
    int trace;
    long long ub;  // playout reshuffles from this yard, kUbInfinity if none
    long long lb;
    std::uint64_t seq;
};

std::vector<Move> assemble_path(const std::vector<TraceRec>& traces, int trace) {
    std::vector<const TraceRec*> chain;
    for (int t = trace; t >= 0; t = traces[t].parent) chain.push_back(&traces[t]);
    std::vector<Move> moves;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        moves.insert(moves.end(), (*it)->moves.begin(), (*it)->moves.end());
    return moves;
}

std::size_t yard_hash(const Yard& y) {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&](std::size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (int s = 1; s <= y.width(); ++s) {
        mix(0x5bd1e995u);
        for (Priority p : y.stack(s)) mix(static_cast<std::size_t>(p));
    }
    return h;
}

}  // namespace

Solution solve_bbs(const Yard& y, const BeamConfig& config) {
    const auto start = Clock::now();
    auto elapsed_s = [&] {
        return std::chrono::duration<double>(Clock::now() - start).count();
    };

    if (config.time_limit <= 0) throw std::invalid_argument("solve_bbs: time limit must be > 0");
    if (config.beta && *config.beta < 1) throw std::invalid_argument("solve_bbs: beta must be >= 1");
    const int n = y.block_count();
    const int beta = config.beta.value_or(schedule_beta(n));
    const PolicyId policy = config.ub_policy.value_or(schedule_policy(n));

    Solution sol;

    detail::Sim root_sim(y);
    std::vector<TraceRec> traces;
    traces.push_back({-1, {}});
    while (!root_sim.empty() && root_sim.target_on_top())
        traces[0].moves.push_back(root_sim.retrieve());

    if (root_sim.empty()) {
        sol.feasible = true;
        sol.moves = traces[0].moves;
        sol.proven_optimal = true;
        sol.cub_history.push_back(0);
        sol.elapsed = elapsed_s();
        return sol;
    }

    const Yard root_yard = root_sim.to_yard();
    long long root_lb;
    try {
        root_lb = bound_total(root_yard, config.lb_kind);
    } catch (const InfeasibleError&) {
        sol.elapsed = elapsed_s();
        return sol;  // provably unsolvable
    }

    long long cub = kUbInfinity;
    std::vector<Move> incumbent;
    {
        detail::Sim po_sim = root_sim;
        Playout po = detail::run_playout(policy, po_sim);
        if (po.completed) {
            cub = po.reshuffles;
            incumbent = traces[0].moves;
            incumbent.insert(incumbent.end(), po.moves.begin(), po.moves.end());
        }
    }
    sol.cub_history.push_back(cub);

    std::vector<Candidate> level;
    level.push_back({root_yard, 0, cub, root_lb, 0});

    bool timed_out = false;
    bool truncated = false;  // a candidate that could still matter was dropped
    std::uint64_t seq = 0;

    for (int depth = 1; !level.empty() && cub > root_lb; ++depth) {
        std::vector<Candidate> next;
        for (const Candidate& node : level) {
            if (timed_out) break;
            detail::Sim sim(node.yard);
            const int source = sim.target_stack();
            for (int s = 0; s < sim.width && !timed_out; ++s) {
                if (s == source || sim.stack_full(s)) continue;
                if (elapsed_s() >= config.time_limit) {
                    timed_out = true;
                    break;
                }
                detail::Sim child = sim;
                std::vector<Move> moves{child.reshuffle(s)};
                while (!child.empty() && child.target_on_top()) moves.push_back(child.retrieve());

                traces.push_back({node.trace, std::move(moves)});
                const int trace = static_cast<int>(traces.size()) - 1;
                ++sol.nodes_generated;

                detail::Sim po_sim = child;
                Playout po = detail::run_playout(policy, po_sim);
                Yard child_yard = child.to_yard();
                long long lb = 0;
                if (!child.empty()) {
                    try {
                        lb = bound_total(child_yard, config.lb_kind);
                    } catch (const InfeasibleError&) {
                        lb = kUbInfinity;  // dead branch; ranks last, pruned below
                    }
                }
                if (po.completed && po.reshuffles + depth < cub) {
                    cub = po.reshuffles + depth;
                    incumbent = assemble_path(traces, trace);
                    incumbent.insert(incumbent.end(), po.moves.begin(), po.moves.end());
                }
                next.push_back({std::move(child_yard), trace, po.ub_value(), lb, seq++});
            }
        }
        if (timed_out) break;

        std::sort(next.begin(), next.end(), [](const Candidate& a, const Candidate& b) {
            if (a.ub != b.ub) return a.ub < b.ub;
            if (a.lb != b.lb) return a.lb < b.lb;
            return a.seq < b.seq;
        });

        if (config.dedup) {
            std::unordered_map<std::size_t, std::vector<const Yard*>> seen;
            std::vector<Candidate> unique;
            unique.reserve(next.size());
            for (Candidate& c : next) {
                auto& bucket = seen[yard_hash(c.yard)];
                bool dup = std::any_of(bucket.begin(), bucket.end(),
                                       [&](const Yard* q) { return *q == c.yard; });
                if (dup) continue;
                unique.push_back(std::move(c));
                bucket.push_back(&unique.back().yard);
            }
            next = std::move(unique);
        }

        if (static_cast<int>(next.size()) > beta) {
            for (std::size_t i = beta; i < next.size(); ++i)
                if (next[i].lb + depth < cub) {
                    truncated = true;
                    break;
                }
            next.resize(beta);
        }

        std::erase_if(next, [&](const Candidate& c) {
            bool cut = c.lb + depth >= cub;
            if (cut) ++sol.nodes_pruned;
            return cut;
        });

        ++sol.levels_expanded;
        sol.cub_history.push_back(cub);
        level = std::move(next);
    }

    sol.feasible = cub < kUbInfinity;
    if (sol.feasible) {
        sol.reshuffles = static_cast<int>(cub);
        sol.moves = std::move(incumbent);
        sol.proven_optimal = cub == root_lb || (!timed_out && !truncated);
    }
    sol.elapsed = elapsed_s();
    return sol;
}

}  // namespace brp
