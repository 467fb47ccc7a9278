#ifndef BRP_EXACT_HPP
#define BRP_EXACT_HPP

/*
    Depth-first branch-and-bound solver for small instances; the
    verification oracle behind the bound and beam tests.  Branches on the
    destination of the forced reshuffle, prunes with depth + bound >=
    incumbent, and seeds the incumbent with a min-max playout.
*/

#include <optional>

#include "brp/beam.hpp"
#include "brp/bounds.hpp"
#include "brp/yard.hpp"

namespace brp {

enum class ExactStatus { Optimal, FeasibleBound, Infeasible, Timeout };

struct ExactResult {
    ExactStatus status = ExactStatus::Infeasible;
    std::optional<Solution> best;
    long long lower_bound = 0;  // best bound proven for the whole instance
    long long nodes = 0;        // nodes expanded
};

// Optimal when the tree was exhausted; Timeout / FeasibleBound report the
// incumbent (if any) when the time limit or node cap stopped the search.
ExactResult solve_exact(const Yard& y, LbKind lb_kind = LbKind::Ubalb,
                        double time_limit = 60.0,
                        std::optional<long long> node_cap = std::nullopt);

}  // namespace brp

#endif
