#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "etop/core.hpp"
#include "etop/rng.hpp"

namespace etop {

struct GaConfig {
    int population_size = 0;  // 0 = auto: 4 * (n + |K| - 1)
    double crossover_rate = 0.6;
    double mutation_rate = 0.05;
    int stagnation_limit = 500;
    int max_generations = 10000;  // safety cap when stagnation never triggers
    std::uint64_t seed = 0;
};

int resolved_population_size(const GaConfig& config, const Instance& instance);

// Total collected reward of the decoded encoding.
double fitness(const Instance& instance, const Encoding& encoding);

// Samples count individuals with replacement, probability proportional to
// fitness; falls back to uniform sampling when every fitness is zero.
std::vector<Encoding> select_roulette(const std::vector<Encoding>& population,
                                      const std::vector<double>& fitnesses, int count, Rng& rng);

// Order crossover (OX) on the permutation part, uniform exchange on the
// break part (re-sorted afterwards). Children are always valid encodings.
std::pair<Encoding, Encoding> crossover(const Encoding& a, const Encoding& b, Rng& rng);

// Each permutation slot swaps with another uniformly chosen slot at
// mutation_rate; each break is redrawn uniformly from [0, n] at the same
// rate, then breaks are re-sorted.
Encoding mutate(Encoding encoding, double mutation_rate, Rng& rng);

// Uniform random permutation plus uniform sorted breaks.
Encoding random_encoding(int n_targets, int n_uavs, Rng& rng);

SolveResult solve_ga(const Instance& instance, const GaConfig& config);

}  // namespace etop
