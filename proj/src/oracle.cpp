#include "etop/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

#include "etop/errors.hpp"

namespace etop {

namespace {

// Tolerances: kPruneSlack keeps the bound from discarding nodes that tie the
// incumbent up to float noise; kReachSlack keeps borderline-reachable
// targets inside the bound. Both err toward searching more, never less.
constexpr double kPruneSlack = 1e-9;
constexpr double kReachSlack = 1e-9;

struct Search {
    const Instance& instance;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    std::vector<std::vector<int>> routes;
    std::vector<char> used;             // by target id
    std::vector<double> speed_ceiling;  // max speed over UAVs k..K-1

    double best = 0.0;
    Solution best_solution;

    explicit Search(const Instance& inst, std::uint64_t node_budget)
        : instance(inst), budget(node_budget) {
        const int k_total = inst.num_uavs();
        routes.resize(static_cast<std::size_t>(k_total));
        used.assign(static_cast<std::size_t>(inst.num_targets()) + 1, 0);
        speed_ceiling.resize(static_cast<std::size_t>(k_total));
        double ceiling = 0.0;
        for (int k = k_total - 1; k >= 0; --k) {
            ceiling = std::max(ceiling, inst.speed(k));
            speed_ceiling[static_cast<std::size_t>(k)] = ceiling;
        }
        best_solution.routes = routes;
    }

    // Unused rewards still collectible by some remaining UAV, at best fresh
    // from the depot (elapsed routes only lengthen arrival, so this bounds
    // from above).
    double remaining_bound(int k) const {
        const double speed = speed_ceiling[static_cast<std::size_t>(k)];
        double bound = 0.0;
        for (int id = 1; id <= instance.num_targets(); ++id) {
            if (used[static_cast<std::size_t>(id)]) continue;
            const Target& target = instance.target(id);
            const double done =
                arrival_after(0.0, instance.distance(0, id), speed, target.service_time);
            if (done <= instance.t_max() + kReachSlack) bound += target.reward;
        }
        return bound;
    }

    // prefix: summed subtotals of closed routes; subtotal: current route's
    // reward so far. Both accumulate left to right exactly like evaluate(),
    // so incumbents match it bit for bit.
    void extend(int k, int current, double elapsed, double prefix, double subtotal,
                int min_first_id) {
        if (nodes >= budget) {
            budget_hit = true;
            return;
        }
        ++nodes;
        if (prefix + subtotal + remaining_bound(k) <= best - kPruneSlack) return;

        std::vector<int>& route = routes[static_cast<std::size_t>(k)];
        const double speed = instance.speed(k);
        for (int id = 1; id <= instance.num_targets(); ++id) {
            if (used[static_cast<std::size_t>(id)]) continue;
            if (route.empty() && id < min_first_id) continue;
            const Target& target = instance.target(id);
            const double done =
                arrival_after(elapsed, instance.distance(current, id), speed, target.service_time);
            if (done > instance.t_max()) continue;

            used[static_cast<std::size_t>(id)] = 1;
            route.push_back(id);
            const double next_subtotal = subtotal + target.reward;
            if (prefix + next_subtotal > best) {
                best = prefix + next_subtotal;
                best_solution.routes = routes;
            }
            extend(k, id, done, prefix, next_subtotal, min_first_id);
            route.pop_back();
            used[static_cast<std::size_t>(id)] = 0;
            if (budget_hit) return;
        }

        if (k + 1 < instance.num_uavs()) {
            int next_min_first = 0;
            if (instance.speed(k + 1) == speed) {
                // Equal-speed UAVs are interchangeable; keep only the
                // representative with ascending first-target ids (an empty
                // route forces the rest of its speed class empty).
                next_min_first = route.empty() ? instance.num_targets() + 1 : route.front() + 1;
            }
            extend(k + 1, 0, 0.0, prefix + subtotal, 0.0, next_min_first);
        }
    }
};

}  // namespace

OracleResult solve_exact(const Instance& instance, const OracleLimits& limits) {
    if (instance.num_targets() > limits.max_targets)
        throw TooLarge("solve_exact: instance exceeds max_targets");
    if (instance.num_uavs() > limits.max_uavs)
        throw TooLarge("solve_exact: instance exceeds max_uavs");
    if (limits.node_budget == 0) throw InvalidArgument("node_budget must be positive");

    const auto t0 = std::chrono::steady_clock::now();
    Search search(instance, limits.node_budget);
    search.extend(0, 0, 0.0, 0.0, 0.0, 0);

    OracleResult out;
    out.result.best_solution = search.best_solution;
    out.result.best_reward = search.best;
    out.result.iterations_run = static_cast<long>(search.nodes);
    out.result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.optimal = !search.budget_hit;
    out.nodes_explored = search.nodes;
    return out;
}

}  // namespace etop
