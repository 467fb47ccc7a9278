#include "brp/yard.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace brp {

Yard::Yard(int width, int height, std::vector<std::vector<Priority>> stacks)
    : width_(width), height_(height), stacks_(std::move(stacks)) {
    if (width_ <= 0 || height_ <= 0)
        throw std::invalid_argument("yard: width and height must be positive");
    if (static_cast<int>(stacks_.size()) != width_)
        throw std::invalid_argument("yard: expected " + std::to_string(width_) +
                                    " stacks, got " + std::to_string(stacks_.size()));
    std::unordered_set<Priority> seen;
    for (const auto& st : stacks_) {
        if (static_cast<int>(st.size()) > height_)
            throw std::invalid_argument("yard: stack exceeds height " + std::to_string(height_));
        for (Priority p : st) {
            if (p < 1)
                throw std::invalid_argument("yard: priority out of range: " + std::to_string(p));
            if (!seen.insert(p).second)
                throw std::invalid_argument("yard: duplicate priority: " + std::to_string(p));
        }
        block_count_ += static_cast<int>(st.size());
    }
}

// Internal constructor for yards derived from an already-validated one.
Yard unchecked_yard(int width, int height, std::vector<std::vector<Priority>> stacks) {
    Yard y;
    y.width_ = width;
    y.height_ = height;
    y.stacks_ = std::move(stacks);
    for (const auto& st : y.stacks_) y.block_count_ += static_cast<int>(st.size());
    return y;
}

const std::vector<Priority>& Yard::stack(int s) const {
    if (s < 1 || s > width_)
        throw std::out_of_range("yard: stack index " + std::to_string(s));
    return stacks_[s - 1];
}

Priority Yard::top(int s) const {
    const auto& st = stack(s);
    return st.empty() ? 0 : st.back();
}

std::vector<Priority> blocking_blocks(const Yard& y) {
    std::vector<Priority> out;
    for (int s = 1; s <= y.width(); ++s) {
        const auto& st = y.stack(s);
        Priority min_below = kSigmaInf;
        for (Priority p : st) {
            if (p > min_below) out.push_back(p);
            min_below = std::min(min_below, p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Priority sigma(const Yard& y, int s) {
    const auto& st = y.stack(s);
    Priority m = kSigmaInf;
    for (Priority p : st) m = std::min(m, p);
    return m;
}

Priority next_target(const Yard& y) {
    if (y.empty()) throw std::invalid_argument("next_target: empty yard");
    Priority m = kSigmaInf;
    for (int s = 1; s <= y.width(); ++s) m = std::min(m, sigma(y, s));
    return m;
}

std::pair<Yard, std::vector<Move>> apply_retrievals(const Yard& y) {
    auto stacks = std::vector<std::vector<Priority>>();
    stacks.reserve(y.width());
    for (int s = 1; s <= y.width(); ++s) stacks.push_back(y.stack(s));

    std::vector<Move> moves;
    for (;;) {
        Priority target = kSigmaInf;
        int where = 0;
        for (int s = 0; s < y.width(); ++s)
            for (Priority p : stacks[s])
                if (p < target) {
                    target = p;
                    where = s;
                }
        if (target == kSigmaInf) break;            // empty
        if (stacks[where].back() != target) break;  // blocked
        stacks[where].pop_back();
        moves.push_back(Move::retrieve(target, where + 1));
    }
    return {unchecked_yard(y.width(), y.height(), std::move(stacks)), std::move(moves)};
}

namespace {

// Stack (1-based) of the current target, requiring it to be blocked.
int blocked_target_stack(const Yard& y) {
    if (y.empty()) throw std::invalid_argument("reshuffle: empty yard");
    Priority target = next_target(y);
    for (int s = 1; s <= y.width(); ++s) {
        const auto& st = y.stack(s);
        if (std::find(st.begin(), st.end(), target) != st.end()) {
            if (st.back() == target)
                throw std::invalid_argument("reshuffle: next target is not blocked");
            return s;
        }
    }
    throw std::logic_error("reshuffle: target not found");
}

}  // namespace

Yard apply_reshuffle(const Yard& y, int to) {
    int from = blocked_target_stack(y);
    if (to < 1 || to > y.width())
        throw std::out_of_range("reshuffle: destination " + std::to_string(to));
    if (to == from)
        throw std::invalid_argument("reshuffle: destination equals source");
    if (y.stack_full(to))
        throw std::invalid_argument("reshuffle: destination stack is full");

    std::vector<std::vector<Priority>> stacks;
    stacks.reserve(y.width());
    for (int s = 1; s <= y.width(); ++s) stacks.push_back(y.stack(s));
    Priority block = stacks[from - 1].back();
    stacks[from - 1].pop_back();
    stacks[to - 1].push_back(block);
    return unchecked_yard(y.width(), y.height(), std::move(stacks));
}

std::vector<RetrievalStep> decompose(const Yard& y) {
    auto stacks = std::vector<std::vector<Priority>>();
    stacks.reserve(y.width());
    for (int s = 1; s <= y.width(); ++s) stacks.push_back(y.stack(s));

    std::vector<RetrievalStep> steps;
    for (;;) {
        Priority target = kSigmaInf;
        int where = -1;
        int tier = -1;
        for (int s = 0; s < y.width(); ++s)
            for (int t = 0; t < static_cast<int>(stacks[s].size()); ++t)
                if (stacks[s][t] < target) {
                    target = stacks[s][t];
                    where = s;
                    tier = t;
                }
        if (where < 0) break;

        RetrievalStep step;
        step.target = target;
        step.source_stack = where + 1;
        // Blockers top -> bottom: the order in which they must be reshuffled.
        for (int t = static_cast<int>(stacks[where].size()) - 1; t > tier; --t)
            step.blockers.push_back(stacks[where][t]);
        stacks[where].resize(tier);  // drop target and everything above

        std::vector<std::vector<Priority>> reduced;
        reduced.reserve(y.width() - 1);
        for (int s = 0; s < y.width(); ++s)
            if (s != where) reduced.push_back(stacks[s]);
        step.reduced = unchecked_yard(y.width() - 1, y.height(), std::move(reduced));
        steps.push_back(std::move(step));
    }
    return steps;
}

Yard apply_move(const Yard& y, const Move& m) {
    if (m.kind == Move::Kind::Retrieve) {
        if (y.empty()) throw std::invalid_argument("retrieve: empty yard");
        Priority target = next_target(y);
        if (m.block != target)
            throw std::invalid_argument("retrieve: block " + std::to_string(m.block) +
                                        " is not the next target");
        const auto& st = y.stack(m.from);
        if (st.empty() || st.back() != m.block)
            throw std::invalid_argument("retrieve: block is not on top of stack " +
                                        std::to_string(m.from));
        std::vector<std::vector<Priority>> stacks;
        stacks.reserve(y.width());
        for (int s = 1; s <= y.width(); ++s) stacks.push_back(y.stack(s));
        stacks[m.from - 1].pop_back();
        return unchecked_yard(y.width(), y.height(), std::move(stacks));
    }
    int from = blocked_target_stack(y);
    if (m.from != from)
        throw std::invalid_argument("reshuffle: move source " + std::to_string(m.from) +
                                    " is not the target's stack");
    if (y.stack(from).back() != m.block)
        throw std::invalid_argument("reshuffle: block " + std::to_string(m.block) +
                                    " is not on top of the target's stack");
    return apply_reshuffle(y, m.to);
}

Yard replay(Yard y, const std::vector<Move>& moves) {
    for (const Move& m : moves) y = apply_move(y, m);
    return y;
}

}  // namespace brp
