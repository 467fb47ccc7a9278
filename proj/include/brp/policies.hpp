#ifndef BRP_POLICIES_HPP
#define BRP_POLICIES_HPP

/*
    Greedy single-move relocation policies and full playouts.

    choose_stack picks the destination for the block that must be
    reshuffled next (the top of the current target's stack); playout runs
    a policy to completion and its reshuffle count is the upper bound fed
    to the beam search.  All rules are deterministic with ties broken by
    the lowest stack index.
*/

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "brp/yard.hpp"

namespace brp {

enum class PolicyId {
    LowestPosition,  // most free slots
    ReshuffleIndex,  // fewest blocks the moved block would sit above
    MinMax,          // tightest minimum above the block, else largest minimum
    Difference1,     // tightest minimum above, else closest smaller top, else smallest top
    Lookahead1,      // cheapest move counting the follow-up reshuffle of the pile
    GroupAssign,     // largest minimum that absorbs the block, else smallest minimum
};

inline constexpr std::array<PolicyId, 6> kAllPolicies = {
    PolicyId::LowestPosition, PolicyId::ReshuffleIndex, PolicyId::MinMax,
    PolicyId::Difference1,    PolicyId::Lookahead1,     PolicyId::GroupAssign,
};

// CLI names: lowest-position, reshuffle-index, min-max, difference1,
// lookahead1, group-assign.
std::string_view to_string(PolicyId p);
std::optional<PolicyId> policy_from_string(std::string_view name);

// The current target is blocked but every other stack is full.
class DeadEndError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reshuffle counts above this sentinel mean "no completed playout".
inline constexpr long long kUbInfinity = 1LL << 60;

struct Playout {
    int reshuffles = 0;
    std::vector<Move> moves;
    bool completed = false;

    // Value used when ranking by upper bound.
    long long ub_value() const { return completed ? reshuffles : kUbInfinity; }
};

// Destination stack (1-based) for the block to reshuffle next.  Requires
// a blocked next target (std::invalid_argument otherwise); throws
// DeadEndError when no destination is eligible.
int choose_stack(PolicyId p, const Yard& y);

// Alternates retrievals with policy-driven reshuffles until the yard is
// empty, a dead end occurs, or the reshuffle budget runs out; the last
// two leave completed == false.
Playout playout(PolicyId p, const Yard& y,
                std::optional<long long> max_reshuffles = std::nullopt);

}  // namespace brp

#endif
