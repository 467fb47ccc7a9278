#include "brp/policies.hpp"

#include <limits>

#include "sim.hpp"

namespace brp {

std::string_view to_string(PolicyId p) {
    switch (p) {
        case PolicyId::LowestPosition: return "lowest-position";
        case PolicyId::ReshuffleIndex: return "reshuffle-index";
        case PolicyId::MinMax: return "min-max";
        case PolicyId::Difference1: return "difference1";
        case PolicyId::Lookahead1: return "lookahead1";
        case PolicyId::GroupAssign: return "group-assign";
    }
    return "?";
}

std::optional<PolicyId> policy_from_string(std::string_view name) {
    for (PolicyId p : kAllPolicies)
        if (to_string(p) == name) return p;
    return std::nullopt;
}

namespace detail {
namespace {

bool is_candidate(const Sim& sim, int s) {
    return s != sim.target_stack() && !sim.stack_full(s);
}

int pick_min_max(const Sim& sim, Priority u) {
    int above = -1, fallback = -1;
    for (int s = 0; s < sim.width; ++s) {
        if (!is_candidate(sim, s)) continue;
        if (sim.sig[s] > u) {
            if (above < 0 || sim.sig[s] < sim.sig[above]) above = s;
        }
        if (fallback < 0 || sim.sig[s] > sim.sig[fallback]) fallback = s;
    }
    return above >= 0 ? above : fallback;
}

int pick_lowest_position(const Sim& sim) {
    int best = -1;
    for (int s = 0; s < sim.width; ++s) {
        if (!is_candidate(sim, s)) continue;
        if (best < 0 || sim.stack_size(s) < sim.stack_size(best)) best = s;
    }
    return best;
}

int pick_reshuffle_index(const Sim& sim, Priority u) {
    int best = -1, best_count = 0;
    for (int s = 0; s < sim.width; ++s) {
        if (!is_candidate(sim, s)) continue;
        int count = 0;
        for (Priority p : sim.stacks[s])
            if (p < u) ++count;
        if (best < 0 || count < best_count) {
            best = s;
            best_count = count;
        }
    }
    return best;
}

int pick_difference1(const Sim& sim, Priority u) {
    int above = -1, below = -1, min_top = -1;
    for (int s = 0; s < sim.width; ++s) {
        if (!is_candidate(sim, s)) continue;
        if (sim.sig[s] > u) {
            if (above < 0 || sim.sig[s] < sim.sig[above]) above = s;
            continue;
        }
        Priority k = sim.top(s);  // 0 for an empty stack
        if (k < u) {
            if (below < 0 || k > sim.top(below)) below = s;
        }
        if (min_top < 0 || k < sim.top(min_top)) min_top = s;
    }
    if (above >= 0) return above;
    if (below >= 0) return below;
    return min_top;
}

int pick_lookahead1(const Sim& sim, Priority u) {
    if (sim.pile_size() < 2) return pick_min_max(sim, u);
    const auto& src = sim.stacks[sim.target_stack()];
    const Priority next = src[src.size() - 2];  // reshuffled right after u

    constexpr long long kNoFollowup = 1'000'000;
    int best = -1;
    long long best_cost = 0;
    for (int s = 0; s < sim.width; ++s) {
        if (!is_candidate(sim, s)) continue;
        long long cost = u > sim.sig[s] ? 1 : 0;
        long long follow = kNoFollowup;
        for (int s2 = 0; s2 < sim.width; ++s2) {
            if (s2 == sim.target_stack()) continue;
            int size2 = sim.stack_size(s2) + (s2 == s ? 1 : 0);
            if (size2 >= sim.height) continue;
            Priority sig2 = s2 == s ? std::min(sim.sig[s], u) : sim.sig[s2];
            follow = std::min(follow, static_cast<long long>(next > sig2 ? 1 : 0));
        }
        cost += follow;
        if (best < 0 || cost < best_cost) {
            best = s;
            best_cost = cost;
        }
    }
    return best;
}

// Algorithm-1 selection applied to the whole pile above the target, in
// reshuffle order, with running minima and capacities; only the first
// choice (the block moved now) is returned.
int pick_group_assign(const Sim& sim, Priority u) {
    int above = -1, fallback = -1;
    for (int s = 0; s < sim.width; ++s) {
        if (!is_candidate(sim, s)) continue;
        if (sim.sig[s] > u) {
            if (above < 0 || sim.sig[s] > sim.sig[above]) above = s;
        }
        if (fallback < 0 || sim.sig[s] < sim.sig[fallback]) fallback = s;
    }
    return above >= 0 ? above : fallback;
}

}  // namespace

// Destination (0-based) for the next reshuffle, or -1 on a dead end.
int choose_destination(PolicyId p, const Sim& sim) {
    const Priority u = sim.stacks[sim.target_stack()].back();
    switch (p) {
        case PolicyId::LowestPosition: return pick_lowest_position(sim);
        case PolicyId::ReshuffleIndex: return pick_reshuffle_index(sim, u);
        case PolicyId::MinMax: return pick_min_max(sim, u);
        case PolicyId::Difference1: return pick_difference1(sim, u);
        case PolicyId::Lookahead1: return pick_lookahead1(sim, u);
        case PolicyId::GroupAssign: return pick_group_assign(sim, u);
    }
    return -1;
}

Playout run_playout(PolicyId p, Sim& sim, std::optional<long long> max_reshuffles) {
    Playout result;
    for (;;) {
        while (!sim.empty() && sim.target_on_top()) result.moves.push_back(sim.retrieve());
        if (sim.empty()) {
            result.completed = true;
            return result;
        }
        if (max_reshuffles && result.reshuffles >= *max_reshuffles) return result;
        int to = choose_destination(p, sim);
        if (to < 0) return result;  // dead end
        result.moves.push_back(sim.reshuffle(to));
        ++result.reshuffles;
    }
}

}  // namespace detail

int choose_stack(PolicyId p, const Yard& y) {
    detail::Sim sim(y);
    if (sim.empty() || sim.target_on_top())
        throw std::invalid_argument("choose_stack: no blocked next target");
    int s = detail::choose_destination(p, sim);
    if (s < 0) throw DeadEndError("choose_stack: every other stack is full");
    return s + 1;
}

Playout playout(PolicyId p, const Yard& y, std::optional<long long> max_reshuffles) {
    detail::Sim sim(y);
    return detail::run_playout(p, sim, max_reshuffles);
}

}  // namespace brp
