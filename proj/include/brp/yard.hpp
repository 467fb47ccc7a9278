#ifndef BRP_YARD_HPP
#define BRP_YARD_HPP

/*
    Yard model for the restricted block relocation problem.

    A yard is w LIFO stacks of capacity h holding blocks with distinct
    retrieval priorities; priority 1 leaves first.  Only the topmost block
    of a stack is accessible.  A reshuffle moves the block sitting on top
    of the current target's stack onto the first free slot of another
    stack; a retrieval removes the target once it is on top.

    Stack indices and tiers are 1-based throughout this interface; tier 1
    is the bottom slot.  Yard values are immutable: every operation returns
    a fresh value and never mutates its input.
*/

#include <limits>
#include <utility>
#include <vector>

namespace brp {

// Retrieval priority of a block; unique within a yard, >= 1.
using Priority = int;

// Minimum priority of an empty stack: compares greater than every block.
inline constexpr Priority kSigmaInf = std::numeric_limits<Priority>::max();

struct Move {
    enum class Kind { Reshuffle, Retrieve };

    Kind kind = Kind::Retrieve;
    Priority block = 0;
    int from = 0;  // 1-based source stack
    int to = 0;    // 1-based destination stack, reshuffles only

    static Move reshuffle(Priority block, int from, int to) {
        return {Kind::Reshuffle, block, from, to};
    }
    static Move retrieve(Priority block, int from) {
        return {Kind::Retrieve, block, from, 0};
    }

    bool operator==(const Move&) const = default;
};

class Yard {
public:
    Yard() = default;

    // Throws std::invalid_argument on a malformed layout (wrong stack
    // count, over-height stack, duplicate or non-positive priority).
    Yard(int width, int height, std::vector<std::vector<Priority>> stacks);

    int width() const { return width_; }
    int height() const { return height_; }

    // Blocks currently present (retrieved blocks are dropped entirely).
    int block_count() const { return block_count_; }
    bool empty() const { return block_count_ == 0; }

    // Stack s bottom -> top, 1-based; throws std::out_of_range.
    const std::vector<Priority>& stack(int s) const;
    int stack_size(int s) const { return static_cast<int>(stack(s).size()); }
    bool stack_full(int s) const { return stack_size(s) >= height_; }
    int free_slots(int s) const { return height_ - stack_size(s); }

    Priority top(int s) const;  // 0 when the stack is empty

    bool operator==(const Yard&) const = default;

private:
    friend Yard unchecked_yard(int, int, std::vector<std::vector<Priority>>);

    int width_ = 0;
    int height_ = 0;
    int block_count_ = 0;
    std::vector<std::vector<Priority>> stacks_;
};

// One step of the retrieval decomposition: target block, its stack, the
// blocks above it (top -> bottom, i.e. in the order they must be
// reshuffled), and the yard that remains once the target's whole stack is
// dropped -- width() - 1 stacks.
struct RetrievalStep {
    Priority target = 0;
    int source_stack = 0;
    std::vector<Priority> blockers;
    Yard reduced;
};

// Every block sitting above some block of smaller priority in its stack,
// in ascending priority order.
std::vector<Priority> blocking_blocks(const Yard& y);

// Minimum priority in stack s, or kSigmaInf when empty.
Priority sigma(const Yard& y, int s);

// Smallest priority present; throws std::invalid_argument on an empty yard.
Priority next_target(const Yard& y);

// Pops retrievable targets until the next target is blocked (or the yard
// empties); returns the reduced yard and the retrieval moves in order.
std::pair<Yard, std::vector<Move>> apply_retrievals(const Yard& y);

// Moves the block on top of the current target's stack onto stack `to`.
// Requires a blocked target, to != source and a non-full destination;
// throws std::invalid_argument otherwise.
Yard apply_reshuffle(const Yard& y, int to);

// The full retrieval-step decomposition: targets in priority order,
// skipping blocks already removed as blockers; removing each target with
// its blockers ends with the empty yard.
std::vector<RetrievalStep> decompose(const Yard& y);

// Applies one move, validating it is legal in this yard (including the
// restricted-move rule: a reshuffle must lift the top of the current
// target's stack).  Throws std::invalid_argument on an illegal move.
Yard apply_move(const Yard& y, const Move& m);

// Replays a move sequence via apply_move; throws if any move is illegal.
Yard replay(Yard y, const std::vector<Move>& moves);

}  // namespace brp

#endif
