// Compares the serial reference kernels against their OpenMP counterparts:
// same seeds, timed both ways, and the results must match bit for bit.
// Usage: etop-perf [threads] [scale]   (threads 0 = library default)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "etop/aco.hpp"
#include "etop/bench.hpp"
#include "etop/gen.hpp"
#include "etop/pso.hpp"

namespace {

template <typename F>
double time_s(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_result(const etop::SolveResult& a, const etop::SolveResult& b) {
    return a.best_reward == b.best_reward &&
           a.best_solution.routes == b.best_solution.routes &&
           a.reward_history == b.reward_history;
}

void print_row(const char* name, double serial_s, double parallel_s, bool match) {
    std::printf("%-12s %10.3fs %10.3fs %8.2fx   %s\n", name, serial_s, parallel_s,
                parallel_s > 0.0 ? serial_s / parallel_s : 0.0, match ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const int threads = argc > 1 ? std::atoi(argv[1]) : 0;
    const std::string scale = argc > 2 ? argv[2] : "medium";

    etop::GenParams params = etop::scale_preset(scale);
    params.seed = 1234;
    const etop::Instance instance = etop::generate(params);
    std::printf("instance: %s (n=%d, K=%d), parallel threads=%s\n", scale.c_str(),
                instance.num_targets(), instance.num_uavs(),
                threads == 0 ? "auto" : std::to_string(threads).c_str());
    std::printf("%-12s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    bool all_match = true;

    {
        etop::AcoConfig config;
        config.seed = 7;
        config.iterations = 30;
        etop::SolveResult serial, parallel;
        config.threads = 1;
        const double ts = time_s([&] { serial = etop::solve_aco(instance, config); });
        config.threads = threads;
        const double tp = time_s([&] { parallel = etop::solve_aco(instance, config); });
        const bool match = same_result(serial, parallel);
        all_match = all_match && match;
        print_row("aco-groups", ts, tp, match);
    }

    {
        etop::PsoConfig config;
        config.seed = 7;
        config.iterations = 400;
        etop::SolveResult serial, parallel;
        config.threads = 1;
        const double ts = time_s([&] { serial = etop::solve_pso(instance, config); });
        config.threads = threads;
        const double tp = time_s([&] { parallel = etop::solve_pso(instance, config); });
        const bool match = same_result(serial, parallel);
        all_match = all_match && match;
        print_row("pso-evals", ts, tp, match);
    }

    {
        etop::BenchPlan plan;
        etop::GenParams cell_params;
        cell_params.n_targets = 20;
        cell_params.n_uavs = 3;
        plan.scales = {cell_params};
        plan.instances_per_scale = 2;
        plan.runs_per_instance = 2;
        plan.master_seed = 99;
        plan.ga.stagnation_limit = 100;
        etop::BenchReport serial, parallel;
        plan.threads = 1;
        const double ts = time_s([&] { serial = etop::run_bench(plan); });
        plan.threads = threads;
        const double tp = time_s([&] { parallel = etop::run_bench(plan); });
        bool match = serial.cells.size() == parallel.cells.size();
        for (std::size_t i = 0; match && i < serial.cells.size(); ++i) {
            match = serial.cells[i].reward == parallel.cells[i].reward &&
                    serial.cells[i].best_solution.routes == parallel.cells[i].best_solution.routes;
        }
        all_match = all_match && match;
        print_row("bench-cells", ts, tp, match);
    }

    if (!all_match) {
        std::printf("parallel kernels disagree with the serial reference\n");
        return 1;
    }
    return 0;
}
