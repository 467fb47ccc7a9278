#ifndef BRP_TEST_HELPERS_HPP
#define BRP_TEST_HELPERS_HPP

#include <vector>

#include "brp/instance_io.hpp"
#include "brp/yard.hpp"

namespace brp::test {

inline Yard yard(int w, int h, std::vector<std::vector<Priority>> stacks) {
    return Yard(w, h, std::move(stacks));
}

// The w=3, h=3 six-block workhorse: stack 1 = [1,6], stack 2 = [3,2,5],
// stack 3 = [4]; blocks 5 and 6 are blocking, the optimum is 3 reshuffles.
inline Yard six_block_yard() { return yard(3, 3, {{1, 6}, {3, 2, 5}, {4}}); }

// Random solvable yard with bounded dimensions, deterministic in `seed`.
inline Yard random_yard(std::uint64_t seed, int max_w, int max_h, int max_n) {
    SplitMix64 rng(seed);
    const int w = 1 + static_cast<int>(rng.bounded(max_w));
    const int h = 1 + static_cast<int>(rng.bounded(max_h));
    const int cap = std::min(max_n, w * h);
    const int n = 1 + static_cast<int>(rng.bounded(cap));
    return generate(w, h, n, rng.next());
}

}  // namespace brp::test

#endif
