#pragma once

#include <vector>

#include "etop/core.hpp"
#include "etop/gen.hpp"
#include "etop/rng.hpp"

// Depot at the origin, targets on the positive x axis. The most readable way
// to get hand-checkable travel times.
inline etop::Instance line_instance(const std::vector<double>& xs,
                                    const std::vector<double>& rewards,
                                    const std::vector<double>& services,
                                    const std::vector<double>& speeds, double t_max) {
    std::vector<etop::Target> targets;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        etop::Target t;
        t.id = static_cast<int>(i) + 1;
        t.position = {xs[i], 0.0};
        t.reward = rewards[i];
        t.service_time = services[i];
        targets.push_back(t);
    }
    return etop::Instance({{0.0, 0.0}}, std::move(targets), {speeds}, t_max);
}

inline etop::Instance random_instance(std::uint64_t seed, int n, int k,
                                      double t_max_factor = 1.5, double area = 30.0) {
    etop::GenParams params;
    params.n_targets = n;
    params.n_uavs = k;
    params.area_side = area;
    params.t_max_factor = t_max_factor;
    params.seed = seed;
    return etop::generate(params);
}

// A random valid solution: a shuffled subset of the targets split across the
// UAVs at random cut points. Routes may be wildly infeasible on purpose;
// evaluate() is expected to truncate them.
inline etop::Solution random_solution(const etop::Instance& instance, etop::Rng& rng) {
    const int n = instance.num_targets();
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
    rng.shuffle(ids);
    const std::size_t keep = rng.below(static_cast<std::uint64_t>(n) + 1);
    ids.resize(keep);

    etop::Solution solution;
    solution.routes.resize(static_cast<std::size_t>(instance.num_uavs()));
    for (int id : ids) {
        const std::size_t k = rng.below(solution.routes.size());
        solution.routes[k].push_back(id);
    }
    return solution;
}
