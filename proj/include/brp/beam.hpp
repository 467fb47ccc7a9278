#ifndef BRP_BEAM_HPP
#define BRP_BEAM_HPP

/*
    Bounded beam search: level-wise enumeration where level i holds the
    yards reachable with exactly i reshuffles.  Every node is expanded
    into one child per eligible destination stack; children are ranked by
    their playout upper bound (lower bound, then generation order, on
    ties), the best beta survive, and survivors that cannot beat the
    incumbent are discarded.  The incumbent is always a replayable move
    sequence, so the search is anytime: stopping at the time limit still
    returns the best playout found.
*/

#include <limits>
#include <optional>
#include <vector>

#include "brp/bounds.hpp"
#include "brp/policies.hpp"
#include "brp/yard.hpp"

namespace brp {

// Beam width by instance size: 800 below 40 blocks, stepping down to 50
// from 120 blocks on.
int schedule_beta(int block_count);

// Playout policy by instance size: lookahead1 below 1000 blocks,
// difference1 up to 10000, group-assign beyond.
PolicyId schedule_policy(int block_count);

inline constexpr int kBetaUnlimited = std::numeric_limits<int>::max();

struct BeamConfig {
    std::optional<int> beta;            // nullopt: schedule_beta on the block count
    std::optional<PolicyId> ub_policy;  // nullopt: schedule_policy on the block count
    LbKind lb_kind = LbKind::Ubalb;
    double time_limit = 1.0;  // seconds
    bool dedup = false;       // drop duplicate yards within a level
};

struct Solution {
    bool feasible = false;
    int reshuffles = 0;
    std::vector<Move> moves;  // full plan, reshuffles and retrievals
    bool proven_optimal = false;

    long long levels_expanded = 0;
    long long nodes_generated = 0;
    long long nodes_pruned = 0;
    double elapsed = 0.0;  // seconds

    // Incumbent value after each completed level; non-increasing.
    std::vector<long long> cub_history;
};

Solution solve_bbs(const Yard& y, const BeamConfig& config = {});

}  // namespace brp

#endif
