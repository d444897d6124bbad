#include "etop/aco.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "etop/errors.hpp"

namespace etop {

namespace {

// Small integer exponents avoid libm pow, whose results vary across
// platforms; the defaults (alpha 1, beta 2, eta 2) all take the fast path.
double power(double base, double exponent) {
    if (exponent == 1.0) return base;
    if (exponent == 2.0) return base * base;
    if (exponent == 0.0) return 1.0;
    if (exponent == 3.0) return base * base * base;
    return std::pow(base, exponent);
}

void check_config(const AcoConfig& config) {
    if (config.m_groups < 1) throw InvalidArgument("m_groups must be positive");
    if (config.iterations < 1) throw InvalidArgument("iterations must be positive");
    if (!(config.initial_pheromone > 0.0))
        throw InvalidArgument("initial_pheromone must be positive");
    if (!(config.pheromone_floor > 0.0)) throw InvalidArgument("pheromone_floor must be positive");
    if (!(config.rho_max > 0.0 && config.rho_max <= 1.0))
        throw InvalidArgument("rho_max must lie in (0, 1]");
    if (config.deposit_scale < 0.0) throw InvalidArgument("deposit_scale must be non-negative");
}

}  // namespace

PheromoneState::PheromoneState(int num_uavs, int num_targets, double initial) {
    if (num_uavs < 1) throw InvalidArgument("PheromoneState: num_uavs must be positive");
    if (num_targets < 1) throw InvalidArgument("PheromoneState: num_targets must be positive");
    if (!(initial > 0.0)) throw InvalidArgument("PheromoneState: initial must be positive");
    num_vertices = num_targets + 1;
    const std::size_t cells =
        static_cast<std::size_t>(num_vertices) * static_cast<std::size_t>(num_vertices);
    tau.assign(static_cast<std::size_t>(num_uavs), std::vector<double>(cells, initial));
}

double heuristic(const Instance& instance, int uav_k, int from, int to) {
    if (from == to) throw InvalidArgument("heuristic: from == to");
    if (to < 1 || to > instance.num_targets())
        throw InvalidArgument("heuristic: to must be a target id");
    const Target& target = instance.target(to);
    return instance.speed(uav_k) * target.reward /
           (instance.distance(from, to) * target.service_time);
}

std::optional<int> next_target(const Instance& instance, const PheromoneState& state, int uav_k,
                               int current, double elapsed, const std::vector<int>& unvisited,
                               double alpha, double beta, Rng& rng) {
    const double speed = instance.speed(uav_k);
    const double t_max = instance.t_max();

    std::vector<int> candidates;
    std::vector<double> cumulative;
    candidates.reserve(unvisited.size());
    cumulative.reserve(unvisited.size());
    double total = 0.0;
    for (int id : unvisited) {
        const double done = arrival_after(elapsed, instance.distance(current, id), speed,
                                          instance.target(id).service_time);
        if (done > t_max) continue;
        const double weight = power(state.get(uav_k, current, id), alpha) *
                              power(heuristic(instance, uav_k, current, id), beta);
        candidates.push_back(id);
        total += weight;
        cumulative.push_back(total);
    }
    if (candidates.empty()) return std::nullopt;

    if (!(total > 0.0) || !std::isfinite(total))
        return candidates[rng.below(candidates.size())];

    const double u = rng.next_double() * total;
    std::size_t pick = static_cast<std::size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
    if (pick >= candidates.size()) pick = candidates.size() - 1;
    return candidates[pick];
}

GroupResult construct_group(const Instance& instance, const PheromoneState& state,
                            const AcoConfig& config, Rng& rng) {
    const int n = instance.num_targets();
    const int k_total = instance.num_uavs();

    std::vector<int> unvisited(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) unvisited[static_cast<std::size_t>(i)] = i + 1;

    GroupResult group;
    group.solution.routes.resize(static_cast<std::size_t>(k_total));
    group.r_ant.assign(static_cast<std::size_t>(k_total), 0.0);

    for (int k = 0; k < k_total; ++k) {
        int current = 0;
        double elapsed = 0.0;
        while (!unvisited.empty()) {
            const std::optional<int> pick = next_target(instance, state, k, current, elapsed,
                                                        unvisited, config.alpha, config.beta, rng);
            if (!pick) break;
            const int id = *pick;
            elapsed = arrival_after(elapsed, instance.distance(current, id), instance.speed(k),
                                    instance.target(id).service_time);
            group.solution.routes[static_cast<std::size_t>(k)].push_back(id);
            group.r_ant[static_cast<std::size_t>(k)] += instance.target(id).reward;
            unvisited.erase(std::find(unvisited.begin(), unvisited.end(), id));
            current = id;
        }
    }
    // Same summation order as evaluate(), so r_group matches it bit for bit.
    for (double r : group.r_ant) group.r_group += r;
    return group;
}

std::vector<double> volatilization_factors(const std::vector<GroupResult>& groups, int num_types,
                                           double eta) {
    if (groups.empty()) throw InvalidArgument("volatilization_factors: no groups");
    double r_max = groups.front().r_group;
    for (const GroupResult& g : groups) r_max = std::max(r_max, g.r_group);

    const double m = static_cast<double>(groups.size());
    std::vector<double> v(static_cast<std::size_t>(num_types), 0.0);
    for (int k = 0; k < num_types; ++k) {
        double sum = 0.0;
        for (const GroupResult& g : groups)
            sum += g.r_ant[static_cast<std::size_t>(k)] / (1.0 + power(r_max - g.r_group, eta));
        v[static_cast<std::size_t>(k)] = sum / m;
    }
    return v;
}

double resolved_deposit_scale(const AcoConfig& config, const Instance& instance) {
    if (config.deposit_scale > 0.0) return config.deposit_scale;
    return 1.0 / upper_bound_reward(instance);
}

void volatilize_and_deposit(PheromoneState& state, const std::vector<GroupResult>& groups,
                            const AcoConfig& config) {
    if (!(config.deposit_scale > 0.0))
        throw InvalidArgument("volatilize_and_deposit: deposit_scale must be resolved");
    const int num_types = static_cast<int>(state.tau.size());
    const std::vector<double> v = volatilization_factors(groups, num_types, config.eta);

    double v_max = 0.0;
    for (double x : v) v_max = std::max(v_max, x);
    for (int k = 0; k < num_types; ++k) {
        const double rho = config.rho_max * v[static_cast<std::size_t>(k)] / (v_max + 1e-12);
        const double keep = 1.0 - rho;
        for (double& entry : state.tau[static_cast<std::size_t>(k)]) entry *= keep;
    }

    for (const GroupResult& group : groups) {
        for (std::size_t k = 0; k < group.solution.routes.size(); ++k) {
            const double amount = config.deposit_scale * group.r_ant[k];
            int from = 0;
            for (int id : group.solution.routes[k]) {
                state.at(static_cast<int>(k), from, id) += amount;
                from = id;
            }
        }
    }

    for (std::vector<double>& matrix : state.tau)
        for (double& entry : matrix) entry = std::max(entry, config.pheromone_floor);
}

SolveResult solve_aco(const Instance& instance, const AcoConfig& config) {
    check_config(config);
    const auto t0 = std::chrono::steady_clock::now();

    AcoConfig cfg = config;
    cfg.deposit_scale = resolved_deposit_scale(config, instance);

    PheromoneState state(instance.num_uavs(), instance.num_targets(), cfg.initial_pheromone);

    SolveResult result;
    result.best_solution.routes.resize(static_cast<std::size_t>(instance.num_uavs()));
    result.best_reward = 0.0;

    const int m = cfg.m_groups;
    std::vector<GroupResult> groups(static_cast<std::size_t>(m));
    for (int it = 0; it < cfg.iterations; ++it) {
        // Every group gets its own derived stream, so the parallel schedule
        // cannot change what any group constructs.
        auto build = [&](int g) {
            Rng group_rng(derive_seed(
                cfg.seed, {static_cast<std::uint64_t>(it), static_cast<std::uint64_t>(g)}));
            groups[static_cast<std::size_t>(g)] =
                construct_group(instance, state, cfg, group_rng);
        };
#ifdef _OPENMP
        if (cfg.threads != 1) {
            const int num_threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(num_threads)
            for (int g = 0; g < m; ++g) build(g);
        } else
#endif
        {
            for (int g = 0; g < m; ++g) build(g);
        }

        for (const GroupResult& group : groups) {
            if (group.r_group > result.best_reward) {
                result.best_reward = group.r_group;
                result.best_solution = group.solution;
            }
        }
        volatilize_and_deposit(state, groups, cfg);
        result.reward_history.push_back(result.best_reward);
    }

    result.iterations_run = cfg.iterations;
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace etop
