#pragma once

#include <cstdint>

#include "etop/core.hpp"

namespace etop {

struct OracleLimits {
    int max_targets = 10;
    int max_uavs = 3;
    std::uint64_t node_budget = 100'000'000;  // search nodes before giving up
};

struct OracleResult {
    SolveResult result;
    bool optimal = false;  // false when the node budget ran out first
    std::uint64_t nodes_explored = 0;
};

// Depth-first branch and bound over per-UAV insertion orders. Prunes with a
// remaining-reward bound (targets no remaining UAV could reach fresh from
// the depot contribute nothing) and collapses equal-speed UAV symmetry by
// forcing ascending first-target ids. Throws TooLarge beyond the limits;
// an exhausted node budget returns the best solution found so far with
// optimal = false.
OracleResult solve_exact(const Instance& instance, const OracleLimits& limits = {});

}  // namespace etop
