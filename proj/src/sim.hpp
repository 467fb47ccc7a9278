#ifndef BRP_SIM_HPP
#define BRP_SIM_HPP

// Internal mutable counterpart of Yard for the solvers' hot loops:
// O(1) reshuffles, O(h) retrievals, incremental stack minima and a
// monotone retrieval cursor over the compressed priority order.

#include <algorithm>
#include <optional>
#include <vector>

#include "brp/policies.hpp"
#include "brp/yard.hpp"

namespace brp::detail {

struct Sim {
    int width = 0;
    int height = 0;
    std::vector<std::vector<Priority>> stacks;  // 0-based
    std::vector<Priority> sig;                  // per-stack minimum, kSigmaInf when empty
    std::vector<Priority> sorted;               // distinct priorities, ascending
    std::vector<int> stack_of;                  // by rank; -1 once retrieved
    std::size_t cursor = 0;                     // rank of the next target
    int blocks = 0;

    explicit Sim(const Yard& y) : width(y.width()), height(y.height()) {
        stacks.reserve(width);
        sig.assign(width, kSigmaInf);
        for (int s = 0; s < width; ++s) {
            stacks.push_back(y.stack(s + 1));
            for (Priority p : stacks[s]) sig[s] = std::min(sig[s], p);
            blocks += static_cast<int>(stacks[s].size());
        }
        sorted.reserve(blocks);
        for (const auto& st : stacks)
            for (Priority p : st) sorted.push_back(p);
        std::sort(sorted.begin(), sorted.end());
        stack_of.assign(sorted.size(), -1);
        for (int s = 0; s < width; ++s)
            for (Priority p : stacks[s]) stack_of[rank_of(p)] = s;
    }

    bool empty() const { return blocks == 0; }

    std::size_t rank_of(Priority p) const {
        return static_cast<std::size_t>(
            std::lower_bound(sorted.begin(), sorted.end(), p) - sorted.begin());
    }

    Priority target() const { return sorted[cursor]; }
    int target_stack() const { return stack_of[cursor]; }

    bool target_on_top() const {
        const auto& st = stacks[target_stack()];
        return st.back() == target();
    }

    int stack_size(int s) const { return static_cast<int>(stacks[s].size()); }
    bool stack_full(int s) const { return stack_size(s) >= height; }
    Priority top(int s) const { return stacks[s].empty() ? 0 : stacks[s].back(); }

    // Blocks above the target in its stack.
    int pile_size() const {
        const auto& st = stacks[target_stack()];
        int tier = 0;
        while (st[tier] != target()) ++tier;
        return static_cast<int>(st.size()) - tier - 1;
    }

    // Removes the target; it must be on top of its stack.
    Move retrieve() {
        const int s = target_stack();
        const Priority p = target();
        stacks[s].pop_back();
        stack_of[cursor] = -1;
        sig[s] = kSigmaInf;
        for (Priority q : stacks[s]) sig[s] = std::min(sig[s], q);
        --blocks;
        ++cursor;
        while (cursor < sorted.size() && stack_of[cursor] < 0) ++cursor;
        return Move::retrieve(p, s + 1);
    }

    // Moves the top of the target's stack onto `to` (0-based).
    Move reshuffle(int to) {
        const int from = target_stack();
        const Priority u = stacks[from].back();
        stacks[from].pop_back();
        stacks[to].push_back(u);
        sig[to] = std::min(sig[to], u);
        stack_of[rank_of(u)] = to;
        return Move::reshuffle(u, from + 1, to + 1);
    }

    Yard to_yard() const {
        std::vector<std::vector<Priority>> copy(stacks.begin(), stacks.end());
        return Yard(width, height, std::move(copy));
    }
};

// Destination (0-based) for the next reshuffle, or -1 on a dead end.
// Requires a nonempty sim whose target is blocked.
int choose_destination(PolicyId p, const Sim& sim);

// Runs a policy playout on the given sim, mutating it.
Playout run_playout(PolicyId p, Sim& sim,
                    std::optional<long long> max_reshuffles = std::nullopt);

}  // namespace brp::detail

#endif
