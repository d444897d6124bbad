#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "etop/pso.hpp"
#include "helpers.hpp"

using namespace etop;

TEST_CASE("swarm and iteration counts scale with the encoding length") {
    const Instance inst = random_instance(1, 30, 5);
    CHECK(resolved_particle_count(PsoConfig{}, inst) == 2 * (30 + 5 - 1));
    CHECK(resolved_iterations(PsoConfig{}, inst) == 40 * (30 + 5 - 1));
    PsoConfig config;
    config.particle_count = 9;
    config.iterations = 13;
    CHECK(resolved_particle_count(config, inst) == 9);
    CHECK(resolved_iterations(config, inst) == 13);
}

TEST_CASE("random-key decoding ranks keys and rounds breaks") {
    const Instance inst = random_instance(2, 3, 2);
    const Encoding enc = decode_particle(inst, {0.3, 0.1, 0.9, 1.6});
    CHECK(enc.perm == std::vector<int>{2, 1, 3});
    CHECK(enc.breaks == std::vector<int>{2});

    // Ties break toward the lower index; breaks clamp into [0, n].
    const Encoding tied = decode_particle(inst, {0.5, 0.5, 0.5, -3.0});
    CHECK(tied.perm == std::vector<int>{1, 2, 3});
    CHECK(tied.breaks == std::vector<int>{0});
    const Encoding high = decode_particle(inst, {0.5, 0.5, 0.5, 99.0});
    CHECK(high.breaks == std::vector<int>{3});

    CHECK_THROWS_AS(decode_particle(inst, std::vector<double>(3, 0.0)), InvalidArgument);
}

TEST_CASE("random positions always decode to valid encodings") {
    const Instance inst = random_instance(3, 7, 3);
    Rng rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> pos(9);
        for (double& x : pos) x = rng.uniform(-5.0, 12.0);
        const Encoding enc = decode_particle(inst, pos);
        CHECK_NOTHROW(decode(inst, enc));
    }
}

TEST_CASE("initial swarm has sane geometry and untouched personal bests") {
    const Instance inst = random_instance(4, 6, 3);
    PsoConfig config;
    config.particle_count = 12;
    Rng rng(6);
    const auto swarm = init_swarm(inst, config, rng);
    REQUIRE(swarm.size() == 12);
    for (const Particle& p : swarm) {
        REQUIRE(p.position.size() == 8);
        REQUIRE(p.velocity.size() == 8);
        for (int i = 0; i < 6; ++i) {
            CHECK(p.position[static_cast<std::size_t>(i)] >= 0.0);
            CHECK(p.position[static_cast<std::size_t>(i)] < 1.0);
            CHECK(std::abs(p.velocity[static_cast<std::size_t>(i)]) <= 0.25 * 1.0);
        }
        for (int i = 6; i < 8; ++i) {
            CHECK(p.position[static_cast<std::size_t>(i)] >= 0.0);
            CHECK(p.position[static_cast<std::size_t>(i)] < 6.0);
            CHECK(std::abs(p.velocity[static_cast<std::size_t>(i)]) <= 0.25 * 6.0);
        }
        CHECK(p.personal_best_position == p.position);
        CHECK(p.personal_best_reward == -std::numeric_limits<double>::infinity());
    }
}

TEST_CASE("mutation respects its probability gate and counts") {
    const Instance inst = random_instance(5, 6, 3);
    PsoConfig config;
    config.particle_count = 10;
    Rng rng(7);
    auto swarm = init_swarm(inst, config, rng);
    const auto before = swarm;

    config.mutation_prob = 0.0;
    mutate_swarm(swarm, inst, config, rng);
    for (std::size_t i = 0; i < swarm.size(); ++i)
        CHECK(swarm[i].position == before[i].position);

    // Forced mutation: exactly ceil(0.5*10)=5 particles change, each in
    // exactly ceil(0.5*8)=4 components.
    config.mutation_prob = 1.0;
    mutate_swarm(swarm, inst, config, rng);
    int changed_particles = 0;
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        int changed_components = 0;
        for (std::size_t d = 0; d < 8; ++d)
            if (swarm[i].position[d] != before[i].position[d]) ++changed_components;
        if (changed_components > 0) {
            ++changed_particles;
            CHECK(changed_components == 4);
        }
        CHECK(swarm[i].personal_best_position == before[i].personal_best_position);
        CHECK(swarm[i].velocity == before[i].velocity);
    }
    CHECK(changed_particles == 5);
}

TEST_CASE("ring neighborhoods pick the best window entry, lowest index on ties") {
    std::vector<Particle> swarm(6);
    for (std::size_t i = 0; i < swarm.size(); ++i) swarm[i].personal_best_reward = 1.0;
    swarm[3].personal_best_reward = 9.0;
    const auto ring = neighborhood_best_indices(swarm, 3);  // windows i-1..i+1
    CHECK(ring == std::vector<std::size_t>{0, 0, 3, 3, 3, 0});

    const auto global = global_best_indices(swarm);
    for (std::size_t i : global) CHECK(i == 3);
}

TEST_CASE("velocity updates pull toward the attractors and stay clamped") {
    const Instance inst = random_instance(6, 4, 2);
    PsoConfig config;
    config.particle_count = 2;
    Rng rng(8);
    auto swarm = init_swarm(inst, config, rng);

    // Stationary fixed point: zero velocity, both attractors at the position.
    for (Particle& p : swarm) {
        std::fill(p.velocity.begin(), p.velocity.end(), 0.0);
        p.personal_best_position = p.position;
        p.personal_best_reward = 1.0;
    }
    swarm[1] = swarm[0];
    auto before = swarm;
    step_velocity_position(swarm, {0, 0}, inst, config, rng);
    for (std::size_t i = 0; i < swarm.size(); ++i)
        CHECK(swarm[i].position == before[i].position);

    // With inertia and cognitive off, the move is social*u2*(nbest-x):
    // strictly toward the neighborhood best in every component.
    config.inertia = 0.0;
    config.cognitive = 0.0;
    config.social = 1.0;
    config.v_max = 100.0;  // effectively unclamped
    swarm[1].position.assign(5, 0.0);
    swarm[1].velocity.assign(5, 0.0);
    swarm[0].personal_best_position.assign(5, 0.5);
    swarm[0].personal_best_reward = 5.0;
    before = swarm;
    step_velocity_position(swarm, {0, 0}, inst, config, rng);
    for (std::size_t d = 0; d < 5; ++d) {
        CHECK(swarm[1].position[d] >= 0.0);
        CHECK(swarm[1].position[d] <= 0.5);
    }

    // Clamp property under violent attractors.
    config = PsoConfig{};
    config.particle_count = 2;
    for (int trial = 0; trial < 1000; ++trial) {
        for (Particle& p : swarm) {
            for (std::size_t d = 0; d < 5; ++d) {
                p.position[d] = rng.uniform(-50.0, 50.0);
                p.velocity[d] = rng.uniform(-50.0, 50.0);
                p.personal_best_position[d] = rng.uniform(-50.0, 50.0);
            }
        }
        step_velocity_position(swarm, {1, 0}, inst, config, rng);
        for (const Particle& p : swarm) {
            for (std::size_t d = 0; d < 5; ++d) CHECK(std::isfinite(p.position[d]));
            for (std::size_t d = 0; d < 4; ++d) CHECK(std::abs(p.velocity[d]) <= 0.25 * 1.0);
            CHECK(std::abs(p.velocity[4]) <= 0.25 * 4.0);
        }
    }
}

TEST_CASE("the search is a pure function of instance, config, seed") {
    const Instance inst = random_instance(7, 10, 3, 0.9);
    PsoConfig config;
    config.particle_count = 16;
    config.iterations = 60;
    config.seed = 44;
    const SolveResult a = solve_pso(inst, config);
    const SolveResult b = solve_pso(inst, config);
    CHECK(a.best_reward == b.best_reward);
    CHECK(a.best_solution.routes == b.best_solution.routes);
    REQUIRE(a.reward_history.size() == b.reward_history.size());
    for (std::size_t i = 0; i < a.reward_history.size(); ++i)
        CHECK(a.reward_history[i] == b.reward_history[i]);

    config.seed = 45;
    const SolveResult c = solve_pso(inst, config);
    CHECK((c.best_reward != a.best_reward || c.best_solution.routes != a.best_solution.routes));
}

TEST_CASE("thread count does not change the result") {
    const Instance inst = random_instance(8, 12, 3, 0.9);
    PsoConfig serial;
    serial.particle_count = 14;
    serial.iterations = 50;
    serial.seed = 3;
    PsoConfig parallel = serial;
    parallel.threads = 4;
    const SolveResult a = solve_pso(inst, serial);
    const SolveResult b = solve_pso(inst, parallel);
    CHECK(a.best_reward == b.best_reward);
    CHECK(a.best_solution.routes == b.best_solution.routes);
    REQUIRE(a.reward_history.size() == b.reward_history.size());
    for (std::size_t i = 0; i < a.reward_history.size(); ++i)
        CHECK(a.reward_history[i] == b.reward_history[i]);
}

TEST_CASE("history is best-so-far and the reward matches the solution") {
    const Instance inst = random_instance(9, 9, 2, 0.8);
    PsoConfig config;
    config.particle_count = 12;
    config.iterations = 80;
    config.seed = 17;
    const SolveResult res = solve_pso(inst, config);
    CHECK(std::is_sorted(res.reward_history.begin(), res.reward_history.end()));
    CHECK(res.reward_history.size() == 80);
    CHECK(res.reward_history.back() == res.best_reward);
    CHECK(res.best_reward == evaluate(inst, res.best_solution).total_reward);
    CHECK_NOTHROW(check_solution(inst, res.best_solution));
}
