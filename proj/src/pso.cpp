#include "etop/pso.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "etop/errors.hpp"

namespace etop {

namespace {

int dimension(const Instance& instance) {
    return instance.num_targets() + instance.num_uavs() - 1;
}

// Per-component velocity clamp: keys initialize over a width-1 range,
// breaks over a width-n range.
double clamp_limit(const Instance& instance, const PsoConfig& config, int component) {
    const double width =
        component < instance.num_targets() ? 1.0 : static_cast<double>(instance.num_targets());
    return config.v_max * width;
}

void check_fraction(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidArgument(std::string(name) + " must lie in [0, 1]");
}

void check_config(const PsoConfig& config) {
    if (config.particle_count < 0) throw InvalidArgument("particle_count must be non-negative");
    if (config.iterations < 0) throw InvalidArgument("iterations must be non-negative");
    check_fraction(config.mutation_prob, "mutation_prob");
    check_fraction(config.mutated_particle_fraction, "mutated_particle_fraction");
    check_fraction(config.mutated_position_fraction, "mutated_position_fraction");
    if (config.neighborhood_size < 1) throw InvalidArgument("neighborhood_size must be positive");
    if (!(config.v_max > 0.0)) throw InvalidArgument("v_max must be positive");
    if (!(config.inertia >= 0.0)) throw InvalidArgument("inertia must be non-negative");
    if (!(config.cognitive >= 0.0)) throw InvalidArgument("cognitive must be non-negative");
    if (!(config.social >= 0.0)) throw InvalidArgument("social must be non-negative");
}

int ceil_count(double fraction, int total) {
    const int count = static_cast<int>(std::ceil(fraction * static_cast<double>(total)));
    return std::min(count, total);
}

double redraw_component(const Instance& instance, int component, Rng& rng) {
    if (component < instance.num_targets()) return rng.next_double();
    return rng.uniform(0.0, static_cast<double>(instance.num_targets()));
}

}  // namespace

int resolved_particle_count(const PsoConfig& config, const Instance& instance) {
    if (config.particle_count > 0) return config.particle_count;
    return 2 * (instance.num_targets() + instance.num_uavs() - 1);
}

int resolved_iterations(const PsoConfig& config, const Instance& instance) {
    if (config.iterations > 0) return config.iterations;
    return 40 * (instance.num_targets() + instance.num_uavs() - 1);
}

Encoding decode_particle(const Instance& instance, const std::vector<double>& position) {
    const int n = instance.num_targets();
    const std::size_t dim = static_cast<std::size_t>(dimension(instance));
    if (position.size() != dim)
        throw InvalidArgument("decode_particle: position has wrong dimension");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&position](int a, int b) {
        return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
    });

    Encoding encoding;
    encoding.perm.assign(static_cast<std::size_t>(n), 0);
    for (int rank = 0; rank < n; ++rank)
        encoding.perm[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = rank + 1;

    encoding.breaks.reserve(dim - static_cast<std::size_t>(n));
    for (std::size_t c = static_cast<std::size_t>(n); c < dim; ++c) {
        const double clamped = std::clamp(position[c], 0.0, static_cast<double>(n));
        encoding.breaks.push_back(static_cast<int>(std::lround(clamped)));
    }
    std::sort(encoding.breaks.begin(), encoding.breaks.end());
    return encoding;
}

std::vector<Particle> init_swarm(const Instance& instance, const PsoConfig& config, Rng& rng) {
    const int count = resolved_particle_count(config, instance);
    const int dim = dimension(instance);

    std::vector<Particle> swarm(static_cast<std::size_t>(count));
    for (Particle& p : swarm) {
        p.position.resize(static_cast<std::size_t>(dim));
        p.velocity.resize(static_cast<std::size_t>(dim));
        for (int c = 0; c < dim; ++c)
            p.position[static_cast<std::size_t>(c)] = redraw_component(instance, c, rng);
        for (int c = 0; c < dim; ++c) {
            const double limit = clamp_limit(instance, config, c);
            p.velocity[static_cast<std::size_t>(c)] = rng.uniform(-limit, limit);
        }
        p.personal_best_position = p.position;
        p.personal_best_reward = -std::numeric_limits<double>::infinity();
    }
    return swarm;
}

void mutate_swarm(std::vector<Particle>& swarm, const Instance& instance, const PsoConfig& config,
                  Rng& rng) {
    if (!rng.bernoulli(config.mutation_prob)) return;

    const int count = ceil_count(config.mutated_particle_fraction, static_cast<int>(swarm.size()));
    const int dim = dimension(instance);
    const int components = ceil_count(config.mutated_position_fraction, dim);

    // Partial Fisher-Yates draws `count` distinct particles uniformly.
    std::vector<std::size_t> picks(swarm.size());
    std::iota(picks.begin(), picks.end(), std::size_t{0});
    for (int i = 0; i < count; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(i) + rng.below(picks.size() - static_cast<std::size_t>(i));
        std::swap(picks[static_cast<std::size_t>(i)], picks[j]);
    }

    std::vector<int> slots(static_cast<std::size_t>(dim));
    for (int i = 0; i < count; ++i) {
        Particle& particle = swarm[picks[static_cast<std::size_t>(i)]];
        std::iota(slots.begin(), slots.end(), 0);
        for (int c = 0; c < components; ++c) {
            const std::size_t j = static_cast<std::size_t>(c) +
                                  rng.below(slots.size() - static_cast<std::size_t>(c));
            std::swap(slots[static_cast<std::size_t>(c)], slots[j]);
            const int slot = slots[static_cast<std::size_t>(c)];
            particle.position[static_cast<std::size_t>(slot)] =
                redraw_component(instance, slot, rng);
        }
    }
}

std::vector<std::size_t> neighborhood_best_indices(const std::vector<Particle>& swarm,
                                                   int neighborhood_size) {
    const std::size_t count = swarm.size();
    const int window = std::min<int>(neighborhood_size, static_cast<int>(count));
    const int left = (window - 1) / 2;

    std::vector<std::size_t> best(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t best_idx = (i + count - static_cast<std::size_t>(left)) % count;
        for (int off = 1; off < window; ++off) {
            const std::size_t j =
                (i + count - static_cast<std::size_t>(left) + static_cast<std::size_t>(off)) %
                count;
            if (swarm[j].personal_best_reward > swarm[best_idx].personal_best_reward ||
                (swarm[j].personal_best_reward == swarm[best_idx].personal_best_reward &&
                 j < best_idx))
                best_idx = j;
        }
        best[i] = best_idx;
    }
    return best;
}

std::vector<std::size_t> global_best_indices(const std::vector<Particle>& swarm) {
    std::size_t best_idx = 0;
    for (std::size_t i = 1; i < swarm.size(); ++i) {
        if (swarm[i].personal_best_reward > swarm[best_idx].personal_best_reward) best_idx = i;
    }
    return std::vector<std::size_t>(swarm.size(), best_idx);
}

void step_velocity_position(std::vector<Particle>& swarm,
                            const std::vector<std::size_t>& best_indices,
                            const Instance& instance, const PsoConfig& config, Rng& rng) {
    if (best_indices.size() != swarm.size())
        throw InvalidArgument("step_velocity_position: best_indices not aligned with swarm");

    const int dim = dimension(instance);
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        Particle& p = swarm[i];
        const std::vector<double>& nbest = swarm[best_indices[i]].personal_best_position;
        for (int c = 0; c < dim; ++c) {
            const std::size_t cc = static_cast<std::size_t>(c);
            const double u1 = rng.next_double();
            const double u2 = rng.next_double();
            double v = config.inertia * p.velocity[cc] +
                       config.cognitive * u1 * (p.personal_best_position[cc] - p.position[cc]) +
                       config.social * u2 * (nbest[cc] - p.position[cc]);
            const double limit = clamp_limit(instance, config, c);
            v = std::clamp(v, -limit, limit);
            p.velocity[cc] = v;
            p.position[cc] += v;
        }
    }
}

SolveResult solve_pso(const Instance& instance, const PsoConfig& config) {
    check_config(config);
    const auto t0 = std::chrono::steady_clock::now();

    const int iterations = resolved_iterations(config, instance);
    Rng rng(config.seed);
    std::vector<Particle> swarm = init_swarm(instance, config, rng);
    const int count = static_cast<int>(swarm.size());

    double best_reward = 0.0;
    Encoding best_encoding;
    bool have_best = false;

    SolveResult result;
    std::vector<double> rewards(swarm.size(), 0.0);
    for (int it = 0; it < iterations; ++it) {
        mutate_swarm(swarm, instance, config, rng);

        // Pure per-particle work; the schedule cannot change any reward.
        auto score = [&](int i) {
            rewards[static_cast<std::size_t>(i)] = evaluate(
                instance,
                decode(instance,
                       decode_particle(instance, swarm[static_cast<std::size_t>(i)].position)))
                .total_reward;
        };
#ifdef _OPENMP
        if (config.threads != 1) {
            const int num_threads = config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(num_threads)
            for (int i = 0; i < count; ++i) score(i);
        } else
#endif
        {
            for (int i = 0; i < count; ++i) score(i);
        }

        for (std::size_t i = 0; i < swarm.size(); ++i) {
            if (rewards[i] > swarm[i].personal_best_reward) {
                swarm[i].personal_best_reward = rewards[i];
                swarm[i].personal_best_position = swarm[i].position;
            }
            if (!have_best || rewards[i] > best_reward) {
                best_reward = rewards[i];
                best_encoding = decode_particle(instance, swarm[i].position);
                have_best = true;
            }
        }

        const bool global_phase = config.global_switch && it >= iterations / 2;
        const std::vector<std::size_t> best_indices =
            global_phase ? global_best_indices(swarm)
                         : neighborhood_best_indices(swarm, config.neighborhood_size);
        step_velocity_position(swarm, best_indices, instance, config, rng);

        result.reward_history.push_back(best_reward);
    }

    if (!have_best) {
        // Zero iterations: fall back to the first particle's decoding.
        best_encoding = decode_particle(instance, swarm.front().position);
        best_reward =
            evaluate(instance, decode(instance, best_encoding)).total_reward;
    }
    result.best_solution = decode(instance, best_encoding);
    result.best_reward = best_reward;
    result.iterations_run = iterations;
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace etop
