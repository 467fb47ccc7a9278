#ifndef BRP_BOUNDS_HPP
#define BRP_BOUNDS_HPP

/*
    Reshuffle lower bounds for the restricted block relocation problem.

    All bounds share one frame: walk the retrieval-step decomposition and
    sum, per step, the number of blockers plus a relaxation term for the
    blockers that must end up blocking again after their reshuffle:

        lb1       relaxation term fixed at zero
        lb3       order and capacity relaxed (a blocker is counted only
                  when every other stack is nonempty with minimum below it)
        lb_ubalb  capacity kept, placement order relaxed; the term is the
                  optimum of a per-step assignment problem, solved exactly
                  by a greedy pass (solve_gmbip_b)

    g_b_bruteforce / g_t_bruteforce / lb4_bruteforce are exhaustive desk-
    scale oracles used to verify the greedy solver and to compare against
    the order-preserving (capacity-relaxed) bound.
*/

#include <stdexcept>
#include <vector>

#include "brp/yard.hpp"

namespace brp {

// The relaxed subproblem has strictly more room than the real yard at the
// failing step, so this means the instance itself cannot be emptied.
class InfeasibleError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Blocks to place plus the receiving stacks' remaining free slots and
// current minima (kSigmaInf for an empty stack).  Stacks are addressed by
// their 0-based position in these arrays.
struct AssignmentInstance {
    std::vector<Priority> blocks;
    std::vector<int> free_slots;       // delta, per stack
    std::vector<Priority> stack_mins;  // sigma, per stack
};

struct BoundBreakdown {
    struct Step {
        Priority target = 0;
        int blockers = 0;    // |B_i|
        int relax_term = 0;  // g_i
    };
    std::vector<Step> per_step;
    long long total = 0;
};

enum class LbKind { Lb1, Lb3, Ubalb };

// Number of blocking blocks.
int lb1(const Yard& y);

// Blockers of the step that are forced to block again when both the
// placement order and the stack capacities are relaxed.
int g_z(const RetrievalStep& step);

BoundBreakdown lb3(const Yard& y);

struct GmbipSolution {
    int cost = 0;
    std::vector<int> assignment;  // assignment[i] = stack receiving blocks[i]
};

// Exact greedy solver for the order-relaxed placement problem: blocks in
// descending priority; each goes to the fullest-minimum stack that can
// absorb it without blocking, else to the smallest-minimum stack with
// room at cost 1.  Ties break toward the lowest stack index.  Runs in
// O(|B| log |B| + w log w).  Throws InfeasibleError when the free slots
// cannot host the blocks.
GmbipSolution solve_gmbip_b(const AssignmentInstance& a);

BoundBreakdown lb_ubalb(const Yard& y);

// Exhaustive minimum over all capacity-respecting assignments; placement
// order within a stack is free, so only block-vs-stack-minimum conflicts
// cost.  Guarded to small instances.
int g_b_bruteforce(const AssignmentInstance& a);

// Exhaustive minimum over all placements of the step's blockers, in their
// reshuffle order, onto the reduced yard with unlimited capacity;
// blocking is counted against stack minima and earlier-placed blockers.
int g_t_bruteforce(const RetrievalStep& step);

// Order-preserving, capacity-relaxed bound assembled from g_t_bruteforce.
// Desk-scale oracle only.
BoundBreakdown lb4_bruteforce(const Yard& y);

BoundBreakdown compute_bound(const Yard& y, LbKind kind);
long long bound_total(const Yard& y, LbKind kind);

}  // namespace brp

#endif
