#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etop/aco.hpp"
#include "etop/core.hpp"
#include "etop/ga.hpp"
#include "etop/gen.hpp"
#include "etop/oracle.hpp"
#include "etop/pso.hpp"

namespace etop {

// Numeric ids feed seed derivation and are frozen; never renumber.
enum class Algo : int { ga = 1, aco = 2, pso = 3, exact = 4 };

const char* algo_name(Algo algo);
std::optional<Algo> algo_from_name(const std::string& name);

struct BenchPlan {
    std::vector<GenParams> scales;
    int instances_per_scale = 10;
    int runs_per_instance = 10;
    std::vector<int> runs_per_scale;  // per-scale override; empty = uniform
    std::vector<Algo> algorithms{Algo::ga, Algo::aco, Algo::pso};
    std::uint64_t master_seed = 0;

    GaConfig ga;  // per-cell seeds overwrite the seed fields below
    AcoConfig aco;
    PsoConfig pso;
    OracleLimits oracle;

    int threads = 1;  // cell-level workers: 1 = serial, 0 = library default
    bool sequential_timing = false;  // force serial cells for clean timings
};

// Small scale fully (10 runs per instance); medium and large at 3 runs per
// instance unless full, which restores 10 everywhere.
BenchPlan default_plan(std::uint64_t master_seed, bool full);

struct BenchCell {
    int scale_index = 0;
    std::string scale_name;
    int instance_index = 0;
    Algo algo = Algo::ga;
    int run_index = 0;
    std::uint64_t seed = 0;

    double reward = 0.0;
    double normalized_reward = 0.0;  // reward / instance upper bound
    double wall_time_s = 0.0;        // environment-dependent, never reproducible
    long iterations = 0;
    Solution best_solution;
    bool ok = false;
    bool optimal = true;  // false for exact cells that hit the node budget
    std::string error;    // nonempty when the cell failed
};

struct BenchGroupStats {
    int scale_index = 0;
    std::string scale_name;
    Algo algo = Algo::ga;
    int cells = 0;
    int failed = 0;
    double mean_reward = 0.0;
    double stddev_reward = 0.0;
    double mean_normalized_reward = 0.0;
    double mean_wall_time = 0.0;
    double stddev_wall_time = 0.0;
};

struct BenchReport {
    BenchPlan plan;
    std::vector<BenchCell> cells;
    std::vector<BenchGroupStats> groups;
    std::string cpu_model;
    std::string version;
};

std::uint64_t instance_seed(std::uint64_t master_seed, int scale_index, int instance_index);
std::uint64_t cell_seed(std::uint64_t master_seed, int scale_index, int instance_index, Algo algo,
                        int run_index);

// The instance a given (scale, index) cell solves, reconstructible from the
// plan alone.
Instance bench_instance(const BenchPlan& plan, int scale_index, int instance_index);

// Executes every (scale, instance, algorithm, run) cell with its derived
// seed. Cell failures are recorded in the cell, never aborting the run.
// Reward fields are bit-reproducible per master_seed, serial or parallel.
BenchReport run_bench(const BenchPlan& plan);

// Per-(scale, algorithm) means and population standard deviations over the
// cells that succeeded.
std::vector<BenchGroupStats> aggregate(const std::vector<BenchCell>& cells);

// Aligned text table plus per-scale wall-time ordering lines.
std::string compare_table(const BenchReport& report);

// Flat per-cell rows; doubles printed shortest-round-trip.
std::string cells_csv(const BenchReport& report);

// Two gnuplot-ready blocks (mean reward, mean wall time), one row per
// scale, one column per algorithm.
std::string gnuplot_columns(const BenchReport& report);

std::string report_to_json(const BenchReport& report);

std::string cpu_model_string();

}  // namespace etop
