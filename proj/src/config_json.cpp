#include "etop/config_json.hpp"

#include <initializer_list>
#include <string>

#include "etop/errors.hpp"

namespace etop {

namespace {

using nlohmann::json;

void check_object(const json& object, const char* section) {
    if (!object.is_object())
        throw InvalidArgument(std::string(section) + " config: expected a JSON object");
}

void check_keys(const json& object, const char* section,
                std::initializer_list<const char*> known) {
    for (const auto& item : object.items()) {
        bool found = false;
        for (const char* key : known)
            if (item.key() == key) {
                found = true;
                break;
            }
        if (!found)
            throw InvalidArgument(std::string(section) + " config: unknown key '" + item.key() +
                                  "'");
    }
}

template <typename T>
void take(const json& object, const char* section, const char* key, T& out) {
    const auto it = object.find(key);
    if (it == object.end()) return;
    try {
        out = it->get<T>();
    } catch (const json::exception&) {
        throw InvalidArgument(std::string(section) + " config: field '" + key +
                              "' has the wrong type");
    }
}

}  // namespace

json ga_config_json(const GaConfig& config) {
    return json{{"population_size", config.population_size},
                {"crossover_rate", config.crossover_rate},
                {"mutation_rate", config.mutation_rate},
                {"stagnation_limit", config.stagnation_limit},
                {"max_generations", config.max_generations},
                {"seed", config.seed}};
}

json aco_config_json(const AcoConfig& config) {
    return json{{"m_groups", config.m_groups},
                {"iterations", config.iterations},
                {"alpha", config.alpha},
                {"beta", config.beta},
                {"eta", config.eta},
                {"initial_pheromone", config.initial_pheromone},
                {"deposit_scale", config.deposit_scale},
                {"pheromone_floor", config.pheromone_floor},
                {"rho_max", config.rho_max},
                {"threads", config.threads},
                {"seed", config.seed}};
}

json pso_config_json(const PsoConfig& config) {
    return json{{"particle_count", config.particle_count},
                {"iterations", config.iterations},
                {"mutation_prob", config.mutation_prob},
                {"mutated_particle_fraction", config.mutated_particle_fraction},
                {"mutated_position_fraction", config.mutated_position_fraction},
                {"inertia", config.inertia},
                {"cognitive", config.cognitive},
                {"social", config.social},
                {"neighborhood_size", config.neighborhood_size},
                {"v_max", config.v_max},
                {"global_switch", config.global_switch},
                {"threads", config.threads},
                {"seed", config.seed}};
}

json oracle_limits_json(const OracleLimits& limits) {
    return json{{"max_targets", limits.max_targets},
                {"max_uavs", limits.max_uavs},
                {"node_budget", limits.node_budget}};
}

void apply_ga_overrides(GaConfig& config, const json& object) {
    check_object(object, "ga");
    check_keys(object, "ga",
               {"population_size", "crossover_rate", "mutation_rate", "stagnation_limit",
                "max_generations", "seed"});
    take(object, "ga", "population_size", config.population_size);
    take(object, "ga", "crossover_rate", config.crossover_rate);
    take(object, "ga", "mutation_rate", config.mutation_rate);
    take(object, "ga", "stagnation_limit", config.stagnation_limit);
    take(object, "ga", "max_generations", config.max_generations);
    take(object, "ga", "seed", config.seed);
}

void apply_aco_overrides(AcoConfig& config, const json& object) {
    check_object(object, "aco");
    check_keys(object, "aco",
               {"m_groups", "iterations", "alpha", "beta", "eta", "initial_pheromone",
                "deposit_scale", "pheromone_floor", "rho_max", "threads", "seed"});
    take(object, "aco", "m_groups", config.m_groups);
    take(object, "aco", "iterations", config.iterations);
    take(object, "aco", "alpha", config.alpha);
    take(object, "aco", "beta", config.beta);
    take(object, "aco", "eta", config.eta);
    take(object, "aco", "initial_pheromone", config.initial_pheromone);
    take(object, "aco", "deposit_scale", config.deposit_scale);
    take(object, "aco", "pheromone_floor", config.pheromone_floor);
    take(object, "aco", "rho_max", config.rho_max);
    take(object, "aco", "threads", config.threads);
    take(object, "aco", "seed", config.seed);
}

void apply_pso_overrides(PsoConfig& config, const json& object) {
    check_object(object, "pso");
    check_keys(object, "pso",
               {"particle_count", "iterations", "mutation_prob", "mutated_particle_fraction",
                "mutated_position_fraction", "inertia", "cognitive", "social",
                "neighborhood_size", "v_max", "global_switch", "threads", "seed"});
    take(object, "pso", "particle_count", config.particle_count);
    take(object, "pso", "iterations", config.iterations);
    take(object, "pso", "mutation_prob", config.mutation_prob);
    take(object, "pso", "mutated_particle_fraction", config.mutated_particle_fraction);
    take(object, "pso", "mutated_position_fraction", config.mutated_position_fraction);
    take(object, "pso", "inertia", config.inertia);
    take(object, "pso", "cognitive", config.cognitive);
    take(object, "pso", "social", config.social);
    take(object, "pso", "neighborhood_size", config.neighborhood_size);
    take(object, "pso", "v_max", config.v_max);
    take(object, "pso", "global_switch", config.global_switch);
    take(object, "pso", "threads", config.threads);
    take(object, "pso", "seed", config.seed);
}

void apply_oracle_overrides(OracleLimits& limits, const json& object) {
    check_object(object, "oracle");
    check_keys(object, "oracle", {"max_targets", "max_uavs", "node_budget"});
    take(object, "oracle", "max_targets", limits.max_targets);
    take(object, "oracle", "max_uavs", limits.max_uavs);
    take(object, "oracle", "node_budget", limits.node_budget);
}

}  // namespace etop
