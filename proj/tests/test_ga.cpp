#include <algorithm>
#include <map>

#include "doctest.h"
#include "etop/ga.hpp"
#include "etop/oracle.hpp"
#include "helpers.hpp"

using namespace etop;

namespace {

bool valid_encoding(const Encoding& enc, int n, int k) {
    if (static_cast<int>(enc.perm.size()) != n) return false;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int id : enc.perm) {
        if (id < 1 || id > n || seen[static_cast<std::size_t>(id)]) return false;
        seen[static_cast<std::size_t>(id)] = 1;
    }
    if (static_cast<int>(enc.breaks.size()) != k - 1) return false;
    int prev = 0;
    for (int b : enc.breaks) {
        if (b < prev || b > n) return false;
        prev = b;
    }
    return true;
}

}  // namespace

TEST_CASE("auto population size is four chromosomes per gene") {
    const Instance inst = random_instance(1, 30, 5);
    CHECK(resolved_population_size(GaConfig{}, inst) == 4 * (30 + 5 - 1));
    GaConfig config;
    config.population_size = 17;
    CHECK(resolved_population_size(config, inst) == 17);
}

TEST_CASE("crossover always produces valid encodings") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Encoding a = random_encoding(9, 4, rng);
        const Encoding b = random_encoding(9, 4, rng);
        const auto [c1, c2] = crossover(a, b, rng);
        CHECK(valid_encoding(c1, 9, 4));
        CHECK(valid_encoding(c2, 9, 4));
    }
}

TEST_CASE("crossover of identical parents reproduces them") {
    Rng rng(4);
    const Encoding a = random_encoding(7, 3, rng);
    for (int trial = 0; trial < 20; ++trial) {
        const auto [c1, c2] = crossover(a, a, rng);
        CHECK(c1.perm == a.perm);
        CHECK(c2.perm == a.perm);
        CHECK(c1.breaks == a.breaks);
        CHECK(c2.breaks == a.breaks);
    }
}

TEST_CASE("mutation rate 0 is the identity, rate 1 stays valid") {
    Rng rng(5);
    const Encoding a = random_encoding(8, 3, rng);
    const Encoding same = mutate(a, 0.0, rng);
    CHECK(same.perm == a.perm);
    CHECK(same.breaks == a.breaks);
    for (int trial = 0; trial < 100; ++trial) {
        CHECK(valid_encoding(mutate(a, 1.0, rng), 8, 3));
    }
}

TEST_CASE("roulette selection favors fitter individuals, survives all-zero fitness") {
    Rng rng(6);
    std::vector<Encoding> pop;
    for (int i = 0; i < 4; ++i) pop.push_back(random_encoding(5, 2, rng));

    // One individual holds 97% of the fitness mass.
    std::vector<double> fit{1.0, 97.0, 1.0, 1.0};
    std::map<std::vector<int>, int> hits;
    for (int round = 0; round < 50; ++round) {
        for (const Encoding& e : select_roulette(pop, fit, 20, rng)) ++hits[e.perm];
    }
    CHECK(hits[pop[1].perm] > 800);

    // Degenerate case: everything infeasible, selection must still work.
    const auto picked = select_roulette(pop, {0.0, 0.0, 0.0, 0.0}, 40, rng);
    CHECK(picked.size() == 40);
    std::map<std::vector<int>, int> uniform_hits;
    for (const Encoding& e : picked) ++uniform_hits[e.perm];
    CHECK(uniform_hits.size() > 1);
}

TEST_CASE("the search is a pure function of instance, config, seed") {
    const Instance inst = random_instance(10, 12, 3, 1.0);
    GaConfig config;
    config.stagnation_limit = 40;
    config.seed = 77;
    const SolveResult a = solve_ga(inst, config);
    const SolveResult b = solve_ga(inst, config);
    CHECK(a.best_reward == b.best_reward);
    CHECK(a.best_solution.routes == b.best_solution.routes);
    CHECK(a.iterations_run == b.iterations_run);
    REQUIRE(a.reward_history.size() == b.reward_history.size());
    for (std::size_t i = 0; i < a.reward_history.size(); ++i)
        CHECK(a.reward_history[i] == b.reward_history[i]);

    config.seed = 78;
    const SolveResult c = solve_ga(inst, config);
    CHECK((c.best_reward != a.best_reward || c.best_solution.routes != a.best_solution.routes));
}

TEST_CASE("reported reward matches re-evaluating the reported solution") {
    const Instance inst = random_instance(11, 10, 2, 0.9);
    GaConfig config;
    config.stagnation_limit = 30;
    config.seed = 5;
    const SolveResult res = solve_ga(inst, config);
    CHECK(res.best_reward == evaluate(inst, res.best_solution).total_reward);
    CHECK_NOTHROW(check_solution(inst, res.best_solution));
}

TEST_CASE("history is best-so-far and stagnation ends the run") {
    const Instance inst = random_instance(12, 10, 2, 1.0);
    GaConfig config;
    config.stagnation_limit = 25;
    config.seed = 9;
    const SolveResult res = solve_ga(inst, config);
    REQUIRE(!res.reward_history.empty());
    CHECK(std::is_sorted(res.reward_history.begin(), res.reward_history.end()));
    CHECK(res.reward_history.back() == res.best_reward);
    CHECK(res.iterations_run <= config.max_generations);
    // The final stagnation_limit generations brought no improvement.
    const std::size_t len = res.reward_history.size();
    if (res.iterations_run < config.max_generations) {
        REQUIRE(len >= 25);
        CHECK(res.reward_history[len - 25] == res.reward_history[len - 1]);
    }
}

TEST_CASE("the search gets close to the exact optimum on a small instance") {
    const Instance inst = random_instance(13, 8, 2, 0.8);
    const OracleResult exact = solve_exact(inst);
    REQUIRE(exact.optimal);
    REQUIRE(exact.result.best_reward > 0.0);
    GaConfig config;
    config.seed = 21;
    const SolveResult res = solve_ga(inst, config);
    CHECK(res.best_reward >= 0.9 * exact.result.best_reward);
    CHECK(res.best_reward <= exact.result.best_reward);
}
