#include "etop/ga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace etop {

namespace {

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidArgument(std::string(name) + " must lie in [0, 1]");
}

// Fitness-proportional index sampling with replacement; uniform fallback
// when the whole pool has zero fitness.
std::vector<std::size_t> roulette_indices(const std::vector<double>& fitnesses, int count,
                                          Rng& rng) {
    std::vector<double> cumulative(fitnesses.size());
    double total = 0.0;
    for (std::size_t i = 0; i < fitnesses.size(); ++i) {
        total += fitnesses[i];
        cumulative[i] = total;
    }

    std::vector<std::size_t> picks;
    picks.reserve(static_cast<std::size_t>(count));
    for (int c = 0; c < count; ++c) {
        std::size_t pick;
        if (total > 0.0 && std::isfinite(total)) {
            const double u = rng.next_double() * total;
            pick = static_cast<std::size_t>(
                std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
            if (pick >= fitnesses.size()) pick = fitnesses.size() - 1;
        } else {
            pick = rng.below(fitnesses.size());
        }
        picks.push_back(pick);
    }
    return picks;
}

}  // namespace

int resolved_population_size(const GaConfig& config, const Instance& instance) {
    if (config.population_size > 0) return config.population_size;
    return 4 * (instance.num_targets() + instance.num_uavs() - 1);
}

double fitness(const Instance& instance, const Encoding& encoding) {
    return evaluate(instance, decode(instance, encoding)).total_reward;
}

std::vector<Encoding> select_roulette(const std::vector<Encoding>& population,
                                      const std::vector<double>& fitnesses, int count, Rng& rng) {
    if (population.empty()) throw InvalidArgument("select_roulette: empty population");
    if (population.size() != fitnesses.size())
        throw InvalidArgument("select_roulette: fitnesses not aligned with population");

    std::vector<Encoding> selected;
    selected.reserve(static_cast<std::size_t>(count));
    for (std::size_t pick : roulette_indices(fitnesses, count, rng))
        selected.push_back(population[pick]);
    return selected;
}

std::pair<Encoding, Encoding> crossover(const Encoding& a, const Encoding& b, Rng& rng) {
    if (a.perm.size() != b.perm.size() || a.breaks.size() != b.breaks.size())
        throw InvalidArgument("crossover: parents disagree on n or |K|");

    const std::size_t n = a.perm.size();
    Encoding child_a = a;
    Encoding child_b = b;

    if (n > 1) {
        std::size_t c1 = rng.below(n);
        std::size_t c2 = rng.below(n);
        if (c1 > c2) std::swap(c1, c2);

        // OX: keep [c1, c2] from one parent, fill the rest in the other
        // parent's cyclic order starting after c2.
        auto ox = [n, c1, c2](const Encoding& keep, const Encoding& fill) {
            std::vector<std::uint8_t> used(n + 1, 0);
            Encoding child;
            child.perm.assign(n, 0);
            child.breaks = keep.breaks;
            for (std::size_t i = c1; i <= c2; ++i) {
                child.perm[i] = keep.perm[i];
                used[static_cast<std::size_t>(keep.perm[i])] = 1;
            }
            std::size_t write = (c2 + 1) % n;
            for (std::size_t step = 0; step < n; ++step) {
                const int gene = fill.perm[(c2 + 1 + step) % n];
                if (used[static_cast<std::size_t>(gene)]) continue;
                child.perm[write] = gene;
                used[static_cast<std::size_t>(gene)] = 1;
                write = (write + 1) % n;
            }
            return child;
        };
        child_a = ox(a, b);
        child_b = ox(b, a);
    }

    for (std::size_t i = 0; i < child_a.breaks.size(); ++i) {
        if (rng.bernoulli(0.5)) std::swap(child_a.breaks[i], child_b.breaks[i]);
    }
    std::sort(child_a.breaks.begin(), child_a.breaks.end());
    std::sort(child_b.breaks.begin(), child_b.breaks.end());
    return {std::move(child_a), std::move(child_b)};
}

Encoding mutate(Encoding encoding, double mutation_rate, Rng& rng) {
    check_probability(mutation_rate, "mutation_rate");
    const std::size_t n = encoding.perm.size();

    if (n > 1) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!rng.bernoulli(mutation_rate)) continue;
            std::size_t j = rng.below(n - 1);
            if (j >= i) ++j;  // uniform over the other slots
            std::swap(encoding.perm[i], encoding.perm[j]);
        }
    }
    for (int& b : encoding.breaks) {
        if (rng.bernoulli(mutation_rate)) b = rng.uniform_int(0, static_cast<int>(n));
    }
    std::sort(encoding.breaks.begin(), encoding.breaks.end());
    return encoding;
}

Encoding random_encoding(int n_targets, int n_uavs, Rng& rng) {
    Encoding e;
    e.perm.resize(static_cast<std::size_t>(n_targets));
    for (int i = 0; i < n_targets; ++i) e.perm[static_cast<std::size_t>(i)] = i + 1;
    rng.shuffle(e.perm);
    e.breaks.resize(static_cast<std::size_t>(n_uavs) - 1);
    for (int& b : e.breaks) b = rng.uniform_int(0, n_targets);
    std::sort(e.breaks.begin(), e.breaks.end());
    return e;
}

SolveResult solve_ga(const Instance& instance, const GaConfig& config) {
    check_probability(config.crossover_rate, "crossover_rate");
    check_probability(config.mutation_rate, "mutation_rate");
    if (config.stagnation_limit < 1) throw InvalidArgument("stagnation_limit must be positive");
    if (config.max_generations < 1) throw InvalidArgument("max_generations must be positive");

    const auto t0 = std::chrono::steady_clock::now();
    const int n = instance.num_targets();
    const int k_total = instance.num_uavs();
    const int pop_size = resolved_population_size(config, instance);
    Rng rng(config.seed);

    std::vector<Encoding> parents;
    std::vector<double> parent_fit;
    parents.reserve(static_cast<std::size_t>(pop_size));
    for (int i = 0; i < pop_size; ++i) parents.push_back(random_encoding(n, k_total, rng));
    parent_fit.reserve(parents.size());
    for (const Encoding& e : parents) parent_fit.push_back(fitness(instance, e));

    Encoding best = parents.front();
    double best_fit = parent_fit.front();
    for (std::size_t i = 1; i < parents.size(); ++i) {
        if (parent_fit[i] > best_fit) {
            best_fit = parent_fit[i];
            best = parents[i];
        }
    }

    SolveResult result;
    result.reward_history.push_back(best_fit);

    std::vector<Encoding> offspring;
    std::vector<double> offspring_fit;
    int stagnant = 0;
    long generation = 0;

    while (generation < config.max_generations && stagnant < config.stagnation_limit) {
        // Selection pool = parent population plus the previous offspring.
        std::vector<Encoding> pool = std::move(parents);
        std::vector<double> pool_fit = std::move(parent_fit);
        std::move(offspring.begin(), offspring.end(), std::back_inserter(pool));
        pool_fit.insert(pool_fit.end(), offspring_fit.begin(), offspring_fit.end());

        const std::vector<std::size_t> picks = roulette_indices(pool_fit, pop_size, rng);
        parents.clear();
        parent_fit.clear();
        for (std::size_t pick : picks) {
            parents.push_back(pool[pick]);
            parent_fit.push_back(pool_fit[pick]);
        }
        parents.front() = best;  // elitism keeps stagnation well-defined
        parent_fit.front() = best_fit;

        offspring.clear();
        offspring.reserve(parents.size());
        for (std::size_t i = 0; i + 1 < parents.size(); i += 2) {
            if (rng.bernoulli(config.crossover_rate)) {
                auto [ca, cb] = crossover(parents[i], parents[i + 1], rng);
                offspring.push_back(std::move(ca));
                offspring.push_back(std::move(cb));
            } else {
                offspring.push_back(parents[i]);
                offspring.push_back(parents[i + 1]);
            }
        }
        if (parents.size() % 2 == 1) offspring.push_back(parents.back());

        for (Encoding& e : offspring) e = mutate(std::move(e), config.mutation_rate, rng);

        offspring_fit.clear();
        offspring_fit.reserve(offspring.size());
        for (const Encoding& e : offspring) offspring_fit.push_back(fitness(instance, e));

        bool improved = false;
        for (std::size_t i = 0; i < offspring.size(); ++i) {
            if (offspring_fit[i] > best_fit) {
                best_fit = offspring_fit[i];
                best = offspring[i];
                improved = true;
            }
        }
        stagnant = improved ? 0 : stagnant + 1;
        ++generation;
        result.reward_history.push_back(best_fit);
    }

    result.best_solution = decode(instance, best);
    result.best_reward = best_fit;
    result.iterations_run = generation;
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace etop
