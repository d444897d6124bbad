#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "etop/core.hpp"
#include "etop/rng.hpp"

namespace etop {

struct AcoConfig {
    int m_groups = 20;
    int iterations = 100;
    double alpha = 1.0;          // pheromone exponent
    double beta = 2.0;           // attractiveness exponent
    double eta = 2.0;            // volatilization exponent
    double initial_pheromone = 1.0;
    double deposit_scale = 0.0;  // 0 = auto: 1 / upper_bound_reward(instance)
    double pheromone_floor = 1e-6;
    double rho_max = 0.5;        // cap on the per-type evaporation rate
    int threads = 1;             // 1 = serial, 0 = library default; identical results
    std::uint64_t seed = 0;
};

// One directed-arc pheromone matrix per UAV over vertices 0..n (0 = depot).
struct PheromoneState {
    PheromoneState(int num_uavs, int num_targets, double initial);

    double get(int uav_k, int from, int to) const {
        return tau[static_cast<std::size_t>(uav_k)][index(from, to)];
    }
    double& at(int uav_k, int from, int to) {
        return tau[static_cast<std::size_t>(uav_k)][index(from, to)];
    }

    std::size_t index(int from, int to) const {
        return static_cast<std::size_t>(from) * static_cast<std::size_t>(num_vertices) +
               static_cast<std::size_t>(to);
    }

    int num_vertices = 0;
    std::vector<std::vector<double>> tau;
};

// Attractiveness of target `to` for UAV `uav_k` standing at vertex `from`:
// speed * reward / (distance * service_time). May be non-finite for
// degenerate inputs (zero distance or service time); the roulette in
// next_target falls back to a uniform pick in that case.
double heuristic(const Instance& instance, int uav_k, int from, int to);

// Roulette pick over the unvisited targets this UAV could still serve within
// t_max, weight tau^alpha * heuristic^beta. Returns nullopt when none fit.
std::optional<int> next_target(const Instance& instance, const PheromoneState& state, int uav_k,
                               int current, double elapsed, const std::vector<int>& unvisited,
                               double alpha, double beta, Rng& rng);

struct GroupResult {
    Solution solution;
    std::vector<double> r_ant;  // reward collected per UAV
    double r_group = 0.0;       // sum over r_ant, equals evaluate().total_reward
};

// One ant per UAV, in UAV index order, sharing a single unvisited set.
// Feasibility is checked before every extension, so routes never truncate.
GroupResult construct_group(const Instance& instance, const PheromoneState& state,
                            const AcoConfig& config, Rng& rng);

// V(k) = sum over groups of r_ant[k] / (1 + (r_max - r_group)^eta), divided
// by the number of groups; r_max is the best r_group of the iteration.
std::vector<double> volatilization_factors(const std::vector<GroupResult>& groups, int num_types,
                                           double eta);

double resolved_deposit_scale(const AcoConfig& config, const Instance& instance);

// Per-type evaporation rho_k = rho_max * V(k) / (max V + eps), then deposits
// deposit_scale * r_ant along each ant's traversed arcs in group order.
// Entries are clamped to pheromone_floor. Requires deposit_scale > 0
// (resolve an auto config first).
void volatilize_and_deposit(PheromoneState& state, const std::vector<GroupResult>& groups,
                            const AcoConfig& config);

SolveResult solve_aco(const Instance& instance, const AcoConfig& config);

}  // namespace etop
