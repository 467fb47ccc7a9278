#include "brp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace brp {

int lb1(const Yard& y) { return static_cast<int>(blocking_blocks(y).size()); }

int g_z(const RetrievalStep& step) {
    // A blocker is forced iff every stack of the reduced yard is nonempty
    // with a smaller minimum; with no stacks at all the condition is
    // vacuously true for every blocker.
    Priority max_sigma = 0;
    for (int s = 1; s <= step.reduced.width(); ++s)
        max_sigma = std::max(max_sigma, sigma(step.reduced, s));
    int forced = 0;
    for (Priority b : step.blockers)
        if (b > max_sigma) ++forced;
    return forced;
}

GmbipSolution solve_gmbip_b(const AssignmentInstance& a) {
    const int m = static_cast<int>(a.blocks.size());
    const int w = static_cast<int>(a.free_slots.size());
    long long capacity = std::accumulate(a.free_slots.begin(), a.free_slots.end(), 0LL);
    if (capacity < m)
        throw InfeasibleError("assignment instance infeasible: " + std::to_string(m) +
                              " blocks, " + std::to_string(capacity) + " free slots");

    std::vector<int> block_order(m);
    std::iota(block_order.begin(), block_order.end(), 0);
    std::sort(block_order.begin(), block_order.end(),
              [&](int i, int j) { return a.blocks[i] > a.blocks[j]; });

    // Stacks by descending minimum, index ascending on ties; a block's
    // zero-cost choice is then the first stack with room, provided its
    // minimum exceeds the block.
    std::vector<int> stack_order(w);
    std::iota(stack_order.begin(), stack_order.end(), 0);
    std::sort(stack_order.begin(), stack_order.end(), [&](int i, int j) {
        if (a.stack_mins[i] != a.stack_mins[j]) return a.stack_mins[i] > a.stack_mins[j];
        return i < j;
    });

    std::vector<int> delta = a.free_slots;
    GmbipSolution sol;
    sol.assignment.assign(m, -1);

    int first = 0;  // leftmost position with remaining capacity
    int last = w - 1;  // rightmost position with remaining capacity
    for (int bi : block_order) {
        const Priority b = a.blocks[bi];
        while (first < w && delta[stack_order[first]] == 0) ++first;
        while (last >= 0 && delta[stack_order[last]] == 0) --last;
        int chosen;
        if (a.stack_mins[stack_order[first]] > b) {
            chosen = stack_order[first];
        } else {
            // Smallest minimum with room; walk equal minima back to the
            // lowest stack index that still has capacity.
            chosen = stack_order[last];
            for (int pos = last;
                 pos > 0 && a.stack_mins[stack_order[pos - 1]] == a.stack_mins[stack_order[last]];
                 --pos)
                if (delta[stack_order[pos - 1]] > 0) chosen = stack_order[pos - 1];
            ++sol.cost;
        }
        sol.assignment[bi] = chosen;
        --delta[chosen];
    }
    return sol;
}

namespace {

// Algorithm-1 selection cost on blocker values against live sigma/size
// arrays, skipping the target's stack.  Same rule as solve_gmbip_b but a
// plain scan; the two are cross-checked in the test suite.
int assignment_cost_scan(std::vector<Priority>& blockers, const std::vector<Priority>& sig,
                         std::vector<int>& used, const std::vector<int>& size, int skip,
                         int height, Priority target) {
    std::sort(blockers.begin(), blockers.end(), std::greater<>());
    const int w = static_cast<int>(sig.size());
    std::fill(used.begin(), used.end(), 0);
    long long capacity = 0;
    for (int s = 0; s < w; ++s)
        if (s != skip) capacity += height - size[s];
    if (capacity < static_cast<long long>(blockers.size()))
        throw InfeasibleError("yard infeasible at retrieval step " + std::to_string(target));

    int cost = 0;
    for (Priority b : blockers) {
        int best_zero = -1, best_min = -1;
        for (int s = 0; s < w; ++s) {
            if (s == skip || height - size[s] - used[s] <= 0) continue;
            if (sig[s] > b) {
                if (best_zero < 0 || sig[s] > sig[best_zero]) best_zero = s;
            }
            if (best_min < 0 || sig[s] < sig[best_min]) best_min = s;
        }
        if (best_zero >= 0) {
            ++used[best_zero];
        } else {
            ++used[best_min];
            ++cost;
        }
    }
    return cost;
}

enum class Term { Zero, Z, B };

BoundBreakdown evaluate_steps(const Yard& y, Term term) {
    const int w = y.width();
    const int h = y.height();
    std::vector<std::vector<Priority>> stacks;
    stacks.reserve(w);
    std::vector<Priority> sig(w, kSigmaInf);
    std::vector<int> size(w, 0);
    for (int s = 0; s < w; ++s) {
        stacks.push_back(y.stack(s + 1));
        size[s] = static_cast<int>(stacks[s].size());
        for (Priority p : stacks[s]) sig[s] = std::min(sig[s], p);
    }

    struct Entry {
        Priority p;
        int stack;
    };
    std::vector<Entry> order;
    order.reserve(y.block_count());
    for (int s = 0; s < w; ++s)
        for (Priority p : stacks[s]) order.push_back({p, s});
    std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) { return a.p < b.p; });
    std::vector<char> removed(order.size(), 0);
    auto rank_of = [&](Priority p) {
        return static_cast<size_t>(
            std::lower_bound(order.begin(), order.end(), p,
                             [](const Entry& e, Priority v) { return e.p < v; }) -
            order.begin());
    };

    std::vector<Priority> blockers;
    std::vector<int> used(w, 0);
    BoundBreakdown out;
    for (size_t idx = 0; idx < order.size(); ++idx) {
        if (removed[idx]) continue;
        const Priority target = order[idx].p;
        const int t = order[idx].stack;
        auto& st = stacks[t];
        int tier = 0;
        while (st[tier] != target) ++tier;

        blockers.assign(st.begin() + tier + 1, st.end());
        const int nb = static_cast<int>(blockers.size());
        int g = 0;
        switch (term) {
            case Term::Zero:
                break;
            case Term::Z: {
                Priority max_sigma = 0;
                for (int s = 0; s < w; ++s)
                    if (s != t) max_sigma = std::max(max_sigma, sig[s]);
                for (Priority b : blockers)
                    if (b > max_sigma) ++g;
                break;
            }
            case Term::B:
                if (nb > 0) g = assignment_cost_scan(blockers, sig, used, size, t, h, target);
                break;
        }
        out.per_step.push_back({target, nb, g});
        out.total += nb + g;

        for (int k = tier; k < static_cast<int>(st.size()); ++k) removed[rank_of(st[k])] = 1;
        st.resize(tier);
        size[t] = tier;
        sig[t] = kSigmaInf;
        for (Priority p : st) sig[t] = std::min(sig[t], p);
    }
    return out;
}

}  // namespace

BoundBreakdown lb3(const Yard& y) { return evaluate_steps(y, Term::Z); }

BoundBreakdown lb_ubalb(const Yard& y) { return evaluate_steps(y, Term::B); }

int g_b_bruteforce(const AssignmentInstance& a) {
    const int m = static_cast<int>(a.blocks.size());
    const int w = static_cast<int>(a.free_slots.size());
    if (m > 10 || w > 8)
        throw std::invalid_argument("g_b_bruteforce: instance too large for the oracle");
    long long capacity = std::accumulate(a.free_slots.begin(), a.free_slots.end(), 0LL);
    if (capacity < m) throw InfeasibleError("g_b_bruteforce: insufficient capacity");
    if (m == 0) return 0;

    std::vector<int> delta = a.free_slots;
    int best = m + 1;
    auto dfs = [&](auto&& self, int i, int cost) -> void {
        if (cost >= best) return;
        if (i == m) {
            best = cost;
            return;
        }
        for (int s = 0; s < w; ++s) {
            if (delta[s] == 0) continue;
            --delta[s];
            self(self, i + 1, cost + (a.blocks[i] > a.stack_mins[s] ? 1 : 0));
            ++delta[s];
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

int g_t_bruteforce(const RetrievalStep& step) {
    const int m = static_cast<int>(step.blockers.size());
    if (m == 0) return 0;
    const int w = step.reduced.width();
    if (w == 0)
        throw InfeasibleError("g_t_bruteforce: no stacks to receive the blockers");
    if (m > 8 || std::pow(static_cast<double>(w), m) > 2e7)
        throw std::invalid_argument("g_t_bruteforce: instance too large for the oracle");

    std::vector<Priority> base_min(w);
    for (int s = 0; s < w; ++s) base_min[s] = sigma(step.reduced, s + 1);

    int best = m + 1;
    std::vector<Priority> cur = base_min;
    // Blockers are placed in their reshuffle order; later ones land above
    // earlier ones, so the running stack minimum decides the cost.
    auto dfs = [&](auto&& self, int i, int cost) -> void {
        if (cost >= best) return;
        if (i == m) {
            best = cost;
            return;
        }
        const Priority b = step.blockers[i];
        for (int s = 0; s < w; ++s) {
            Priority prev = cur[s];
            cur[s] = std::min(cur[s], b);
            self(self, i + 1, cost + (b > prev ? 1 : 0));
            cur[s] = prev;
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

BoundBreakdown lb4_bruteforce(const Yard& y) {
    BoundBreakdown out;
    for (const RetrievalStep& step : decompose(y)) {
        int g = g_t_bruteforce(step);
        out.per_step.push_back(
            {step.target, static_cast<int>(step.blockers.size()), g});
        out.total += step.blockers.size() + g;
    }
    return out;
}

BoundBreakdown compute_bound(const Yard& y, LbKind kind) {
    switch (kind) {
        case LbKind::Lb1:
            return evaluate_steps(y, Term::Zero);
        case LbKind::Lb3:
            return lb3(y);
        case LbKind::Ubalb:
        default:
            return lb_ubalb(y);
    }
}

long long bound_total(const Yard& y, LbKind kind) { return compute_bound(y, kind).total; }

}  // namespace brp
