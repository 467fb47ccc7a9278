#include "brp/exact.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

#include "sim.hpp"

namespace brp {

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
    LbKind lb_kind;
    double time_limit;
    std::optional<long long> node_cap;
    Clock::time_point start;

    long long best = kUbInfinity;
    std::vector<Move> best_moves;
    std::vector<Move> path;
    long long nodes = 0;
    bool timed_out = false;
    bool capped = false;

    bool interrupted() {
        if (timed_out || capped) return true;
        if (node_cap && nodes >= *node_cap) {
            capped = true;
            return true;
        }
        if (std::chrono::duration<double>(Clock::now() - start).count() >= time_limit) {
            timed_out = true;
            return true;
        }
        return false;
    }

    // `cur` is post-retrieval; `lb` is its bound; `depth` its reshuffles.
    void dfs(const Yard& cur, long long lb, long long depth) {
        if (interrupted()) return;
        ++nodes;
        if (cur.empty()) {
            if (depth < best) {
                best = depth;
                best_moves = path;
            }
            return;
        }
        if (depth + lb >= best) return;

        detail::Sim sim(cur);
        const int source = sim.target_stack();
        struct Child {
            long long lb;
            int dest;  // 0-based
            Yard yard;
            std::vector<Move> moves;
        };
        std::vector<Child> children;
        for (int s = 0; s < sim.width; ++s) {
            if (s == source || sim.stack_full(s)) continue;
            detail::Sim child = sim;
            std::vector<Move> moves{child.reshuffle(s)};
            while (!child.empty() && child.target_on_top()) moves.push_back(child.retrieve());
            Yard child_yard = child.to_yard();
            long long child_lb = 0;
            if (!child.empty()) {
                try {
                    child_lb = bound_total(child_yard, lb_kind);
                } catch (const InfeasibleError&) {
                    continue;  // subtree provably unsolvable
                }
            }
            children.push_back({child_lb, s, std::move(child_yard), std::move(moves)});
        }
        std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
            if (a.lb != b.lb) return a.lb < b.lb;
            return a.dest < b.dest;
        });
        for (Child& c : children) {
            path.insert(path.end(), c.moves.begin(), c.moves.end());
            dfs(c.yard, c.lb, depth + 1);
            path.resize(path.size() - c.moves.size());
            if (timed_out || capped) return;
        }
    }
};

}  // namespace

ExactResult solve_exact(const Yard& y, LbKind lb_kind, double time_limit,
                        std::optional<long long> node_cap) {
    const auto start = Clock::now();
    ExactResult result;

    auto [root, root_moves] = apply_retrievals(y);
    long long root_lb = 0;
    if (!root.empty()) {
        try {
            root_lb = bound_total(root, lb_kind);
        } catch (const InfeasibleError&) {
            result.status = ExactStatus::Infeasible;
            return result;
        }
    }

    Search search{lb_kind, time_limit, node_cap, start, kUbInfinity, {}, {}, 0, false, false};
    Playout seed = playout(PolicyId::MinMax, y);
    if (seed.completed) {
        search.best = seed.reshuffles;
        search.best_moves = seed.moves;
    }

    search.path = root_moves;
    search.dfs(root, root_lb, 0);

    result.nodes = search.nodes;
    if (search.timed_out)
        result.status = ExactStatus::Timeout;
    else if (search.capped)
        result.status = ExactStatus::FeasibleBound;
    else
        result.status =
            search.best < kUbInfinity ? ExactStatus::Optimal : ExactStatus::Infeasible;

    if (search.best < kUbInfinity) {
        Solution sol;
        sol.feasible = true;
        sol.reshuffles = static_cast<int>(search.best);
        sol.moves = std::move(search.best_moves);
        sol.proven_optimal = result.status == ExactStatus::Optimal;
        sol.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        result.best = std::move(sol);
    }
    result.lower_bound =
        result.status == ExactStatus::Optimal ? search.best : root_lb;
    return result;
}

}  // namespace brp
