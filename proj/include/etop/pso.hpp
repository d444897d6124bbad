#pragma once

#include <cstdint>
#include <vector>

#include "etop/core.hpp"
#include "etop/rng.hpp"

namespace etop {

struct PsoConfig {
    int particle_count = 0;  // 0 = auto: 2 * (n + |K| - 1)
    int iterations = 0;      // 0 = auto: 40 * (n + |K| - 1)
    double mutation_prob = 0.4;
    double mutated_particle_fraction = 0.5;
    double mutated_position_fraction = 0.5;
    double inertia = 0.7;
    double cognitive = 1.5;
    double social = 1.5;
    int neighborhood_size = 5;  // ring window, includes the particle itself
    double v_max = 0.25;        // fraction of each component's init range width
    bool global_switch = true;  // ring topology for the first half, global after
    int threads = 1;            // 1 = serial, 0 = library default; identical results
    std::uint64_t seed = 0;
};

// Positions are continuous: the first n components are sort keys for the
// target permutation, the last |K|-1 components map to break points.
struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> personal_best_position;
    double personal_best_reward = 0.0;
};

int resolved_particle_count(const PsoConfig& config, const Instance& instance);
int resolved_iterations(const PsoConfig& config, const Instance& instance);

// Random-key decoding: perm[i] = rank of key i among the first n components
// (ties broken by index); each break component is clamped to [0, n], rounded
// to the nearest integer, then the breaks are sorted.
Encoding decode_particle(const Instance& instance, const std::vector<double>& position);

// Keys uniform in [0,1], breaks uniform in [0,n], velocities uniform within
// the per-component clamp range. Personal bests start at the initial
// positions with reward -inf so the first evaluation always records them.
std::vector<Particle> init_swarm(const Instance& instance, const PsoConfig& config, Rng& rng);

// With probability mutation_prob, redraws ceil(fraction * dim) components in
// each of ceil(fraction * PN) distinct particles from the initialization
// distribution. Positions only; personal bests are untouched.
void mutate_swarm(std::vector<Particle>& swarm, const Instance& instance, const PsoConfig& config,
                  Rng& rng);

// Index of the best personal best within each particle's ring window, the
// lowest index winning ties.
std::vector<std::size_t> neighborhood_best_indices(const std::vector<Particle>& swarm,
                                                   int neighborhood_size);

// Index of the best personal best of the whole swarm, replicated per
// particle (fully-global topology).
std::vector<std::size_t> global_best_indices(const std::vector<Particle>& swarm);

// v <- inertia*v + cognitive*u1*(pbest - x) + social*u2*(nbest - x) with
// fresh u1, u2 per component, clamped per component family; then x <- x + v.
void step_velocity_position(std::vector<Particle>& swarm,
                            const std::vector<std::size_t>& best_indices,
                            const Instance& instance, const PsoConfig& config, Rng& rng);

SolveResult solve_pso(const Instance& instance, const PsoConfig& config);

}  // namespace etop
