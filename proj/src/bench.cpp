#include "etop/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

#include "etop/config_json.hpp"
#include "etop/errors.hpp"
#include "etop/rng.hpp"
#include "etop/version.hpp"

namespace etop {

namespace {

using nlohmann::json;

// Shortest representation that round-trips exactly.
std::string fmt_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

int runs_for_scale(const BenchPlan& plan, int scale_index) {
    if (plan.runs_per_scale.empty()) return plan.runs_per_instance;
    return plan.runs_per_scale[static_cast<std::size_t>(scale_index)];
}

void check_plan(const BenchPlan& plan) {
    if (plan.scales.empty()) throw InvalidArgument("bench plan: no scales");
    if (plan.algorithms.empty()) throw InvalidArgument("bench plan: no algorithms");
    if (plan.instances_per_scale < 1)
        throw InvalidArgument("bench plan: instances_per_scale must be positive");
    if (!plan.runs_per_scale.empty() && plan.runs_per_scale.size() != plan.scales.size())
        throw InvalidArgument("bench plan: runs_per_scale must match scales");
    for (std::size_t s = 0; s < plan.scales.size(); ++s) {
        if (runs_for_scale(plan, static_cast<int>(s)) < 1)
            throw InvalidArgument("bench plan: runs per instance must be positive");
    }
}

std::string scale_label(const GenParams& params, int index) {
    if (!params.preset.empty()) return params.preset;
    return "custom" + std::to_string(index);
}

void run_cell(BenchCell& cell, const BenchPlan& plan, const Instance& instance,
              double upper_bound) {
    try {
        SolveResult solved;
        switch (cell.algo) {
            case Algo::ga: {
                GaConfig config = plan.ga;
                config.seed = cell.seed;
                solved = solve_ga(instance, config);
                break;
            }
            case Algo::aco: {
                AcoConfig config = plan.aco;
                config.seed = cell.seed;
                solved = solve_aco(instance, config);
                break;
            }
            case Algo::pso: {
                PsoConfig config = plan.pso;
                config.seed = cell.seed;
                solved = solve_pso(instance, config);
                break;
            }
            case Algo::exact: {
                OracleResult exact = solve_exact(instance, plan.oracle);
                solved = std::move(exact.result);
                cell.optimal = exact.optimal;
                break;
            }
        }
        cell.reward = solved.best_reward;
        // Collecting every target can land an ulp above 1 because the route
        // sum and the upper bound accumulate in different orders; the ratio
        // is clamped so normalized_reward stays in [0, 1].
        cell.normalized_reward = std::min(1.0, solved.best_reward / upper_bound);
        cell.wall_time_s = solved.wall_time_s;
        cell.iterations = solved.iterations_run;
        cell.best_solution = std::move(solved.best_solution);
        cell.ok = true;
    } catch (const std::exception& e) {
        cell.ok = false;
        cell.error = e.what();
    }
}

}  // namespace

const char* algo_name(Algo algo) {
    switch (algo) {
        case Algo::ga: return "ga";
        case Algo::aco: return "aco";
        case Algo::pso: return "pso";
        case Algo::exact: return "exact";
    }
    return "unknown";
}

std::optional<Algo> algo_from_name(const std::string& name) {
    if (name == "ga") return Algo::ga;
    if (name == "aco") return Algo::aco;
    if (name == "pso") return Algo::pso;
    if (name == "exact") return Algo::exact;
    return std::nullopt;
}

BenchPlan default_plan(std::uint64_t master_seed, bool full) {
    BenchPlan plan;
    plan.scales = {scale_preset("small"), scale_preset("medium"), scale_preset("large")};
    plan.master_seed = master_seed;
    if (!full) plan.runs_per_scale = {10, 3, 3};
    return plan;
}

std::uint64_t instance_seed(std::uint64_t master_seed, int scale_index, int instance_index) {
    return derive_seed(master_seed, {static_cast<std::uint64_t>(scale_index),
                                     static_cast<std::uint64_t>(instance_index)});
}

std::uint64_t cell_seed(std::uint64_t master_seed, int scale_index, int instance_index, Algo algo,
                        int run_index) {
    return derive_seed(
        master_seed,
        {static_cast<std::uint64_t>(scale_index), static_cast<std::uint64_t>(instance_index),
         static_cast<std::uint64_t>(static_cast<int>(algo)), static_cast<std::uint64_t>(run_index)});
}

Instance bench_instance(const BenchPlan& plan, int scale_index, int instance_index) {
    GenParams params = plan.scales[static_cast<std::size_t>(scale_index)];
    params.seed = instance_seed(plan.master_seed, scale_index, instance_index);
    return generate(params);
}

BenchReport run_bench(const BenchPlan& plan) {
    check_plan(plan);

    std::vector<std::vector<Instance>> instances;
    std::vector<std::vector<double>> bounds;
    instances.reserve(plan.scales.size());
    bounds.reserve(plan.scales.size());
    for (std::size_t s = 0; s < plan.scales.size(); ++s) {
        std::vector<Instance> row;
        std::vector<double> bound_row;
        row.reserve(static_cast<std::size_t>(plan.instances_per_scale));
        for (int i = 0; i < plan.instances_per_scale; ++i) {
            row.push_back(bench_instance(plan, static_cast<int>(s), i));
            bound_row.push_back(upper_bound_reward(row.back()));
        }
        instances.push_back(std::move(row));
        bounds.push_back(std::move(bound_row));
    }

    BenchReport report;
    report.plan = plan;
    for (std::size_t s = 0; s < plan.scales.size(); ++s) {
        const int runs = runs_for_scale(plan, static_cast<int>(s));
        for (int i = 0; i < plan.instances_per_scale; ++i) {
            for (Algo algo : plan.algorithms) {
                for (int r = 0; r < runs; ++r) {
                    BenchCell cell;
                    cell.scale_index = static_cast<int>(s);
                    cell.scale_name = scale_label(plan.scales[s], static_cast<int>(s));
                    cell.instance_index = i;
                    cell.algo = algo;
                    cell.run_index = r;
                    cell.seed = cell_seed(plan.master_seed, static_cast<int>(s), i, algo, r);
                    report.cells.push_back(std::move(cell));
                }
            }
        }
    }

    const auto execute = [&](std::size_t index) {
        BenchCell& cell = report.cells[index];
        const std::size_t s = static_cast<std::size_t>(cell.scale_index);
        const std::size_t i = static_cast<std::size_t>(cell.instance_index);
        run_cell(cell, plan, instances[s][i], bounds[s][i]);
    };

    const std::size_t total = report.cells.size();
    const bool parallel = !plan.sequential_timing && plan.threads != 1;
#ifdef _OPENMP
    if (parallel) {
        const int num_threads = plan.threads > 0 ? plan.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(num_threads)
        for (std::size_t c = 0; c < total; ++c) execute(c);
    } else
#endif
    {
        (void)parallel;
        for (std::size_t c = 0; c < total; ++c) execute(c);
    }

    report.groups = aggregate(report.cells);
    report.cpu_model = cpu_model_string();
    report.version = kVersion;
    return report;
}

std::vector<BenchGroupStats> aggregate(const std::vector<BenchCell>& cells) {
    std::vector<BenchGroupStats> groups;
    std::map<std::pair<int, int>, std::size_t> slot;

    for (const BenchCell& cell : cells) {
        const std::pair<int, int> key{cell.scale_index, static_cast<int>(cell.algo)};
        auto it = slot.find(key);
        if (it == slot.end()) {
            BenchGroupStats stats;
            stats.scale_index = cell.scale_index;
            stats.scale_name = cell.scale_name;
            stats.algo = cell.algo;
            it = slot.emplace(key, groups.size()).first;
            groups.push_back(stats);
        }
        BenchGroupStats& stats = groups[it->second];
        ++stats.cells;
        if (!cell.ok) ++stats.failed;
    }

    for (BenchGroupStats& stats : groups) {
        double sum_r = 0.0, sum_n = 0.0, sum_t = 0.0;
        int ok = 0;
        for (const BenchCell& cell : cells) {
            if (!cell.ok || cell.scale_index != stats.scale_index || cell.algo != stats.algo)
                continue;
            sum_r += cell.reward;
            sum_n += cell.normalized_reward;
            sum_t += cell.wall_time_s;
            ++ok;
        }
        if (ok == 0) continue;
        const double count = static_cast<double>(ok);
        stats.mean_reward = sum_r / count;
        stats.mean_normalized_reward = sum_n / count;
        stats.mean_wall_time = sum_t / count;

        double var_r = 0.0, var_t = 0.0;
        for (const BenchCell& cell : cells) {
            if (!cell.ok || cell.scale_index != stats.scale_index || cell.algo != stats.algo)
                continue;
            var_r += (cell.reward - stats.mean_reward) * (cell.reward - stats.mean_reward);
            var_t += (cell.wall_time_s - stats.mean_wall_time) *
                     (cell.wall_time_s - stats.mean_wall_time);
        }
        stats.stddev_reward = std::sqrt(var_r / count);
        stats.stddev_wall_time = std::sqrt(var_t / count);
    }

    std::sort(groups.begin(), groups.end(), [](const BenchGroupStats& a, const BenchGroupStats& b) {
        if (a.scale_index != b.scale_index) return a.scale_index < b.scale_index;
        return static_cast<int>(a.algo) < static_cast<int>(b.algo);
    });
    return groups;
}

std::string compare_table(const BenchReport& report) {
    if (report.groups.empty()) throw InvalidArgument("compare_table: empty report");

    std::string out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-10s %-6s %6s %12s %12s %10s %12s %12s\n", "scale",
                  "algo", "cells", "mean_reward", "sd_reward", "mean_norm", "mean_time_s",
                  "sd_time_s");
    out += line;
    for (const BenchGroupStats& g : report.groups) {
        std::snprintf(line, sizeof(line), "%-10s %-6s %6d %12.3f %12.3f %10.4f %12.4f %12.4f\n",
                      g.scale_name.c_str(), algo_name(g.algo), g.cells, g.mean_reward,
                      g.stddev_reward, g.mean_normalized_reward, g.mean_wall_time,
                      g.stddev_wall_time);
        out += line;
        if (g.failed > 0) {
            std::snprintf(line, sizeof(line), "%-10s %-6s        %d cell(s) failed\n",
                          g.scale_name.c_str(), algo_name(g.algo), g.failed);
            out += line;
        }
    }

    // Observed wall-time ordering per scale, slowest last.
    int max_scale = 0;
    for (const BenchGroupStats& g : report.groups) max_scale = std::max(max_scale, g.scale_index);
    for (int s = 0; s <= max_scale; ++s) {
        std::vector<const BenchGroupStats*> row;
        for (const BenchGroupStats& g : report.groups) {
            if (g.scale_index == s && g.cells > g.failed) row.push_back(&g);
        }
        if (row.size() < 2) continue;
        std::sort(row.begin(), row.end(), [](const BenchGroupStats* a, const BenchGroupStats* b) {
            return a->mean_wall_time < b->mean_wall_time;
        });
        out += "wall-time ordering at " + row.front()->scale_name + ": ";
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += " < ";
            out += algo_name(row[i]->algo);
        }
        out += '\n';
    }
    return out;
}

std::string cells_csv(const BenchReport& report) {
    std::string out =
        "scale_index,scale,instance,algo,run,seed,reward,normalized_reward,wall_time_s,"
        "iterations,ok,optimal,error\n";
    for (const BenchCell& cell : report.cells) {
        out += std::to_string(cell.scale_index) + ',';
        out += csv_escape(cell.scale_name) + ',';
        out += std::to_string(cell.instance_index) + ',';
        out += algo_name(cell.algo);
        out += ',';
        out += std::to_string(cell.run_index) + ',';
        out += std::to_string(cell.seed) + ',';
        out += fmt_double(cell.reward) + ',';
        out += fmt_double(cell.normalized_reward) + ',';
        out += fmt_double(cell.wall_time_s) + ',';
        out += std::to_string(cell.iterations) + ',';
        out += cell.ok ? "1," : "0,";
        out += cell.optimal ? "1," : "0,";
        out += csv_escape(cell.error) + '\n';
    }
    return out;
}

std::string gnuplot_columns(const BenchReport& report) {
    std::vector<Algo> algos = report.plan.algorithms;
    std::string header = "# scale";
    for (Algo a : algos) header += std::string(" ") + algo_name(a);
    header += '\n';

    int max_scale = 0;
    for (const BenchGroupStats& g : report.groups) max_scale = std::max(max_scale, g.scale_index);

    const auto block = [&](bool times) {
        std::string out = header;
        for (int s = 0; s <= max_scale; ++s) {
            std::string name;
            std::string row;
            for (Algo a : algos) {
                const BenchGroupStats* found = nullptr;
                for (const BenchGroupStats& g : report.groups)
                    if (g.scale_index == s && g.algo == a) found = &g;
                row += ' ';
                if (found) {
                    name = found->scale_name;
                    row += fmt_double(times ? found->mean_wall_time : found->mean_reward);
                } else {
                    row += "nan";
                }
            }
            if (name.empty()) continue;
            out += name + row + '\n';
        }
        return out;
    };

    return "# mean reward per scale and algorithm\n" + block(false) +
           "\n\n# mean wall time (s) per scale and algorithm\n" + block(true);
}

std::string report_to_json(const BenchReport& report) {
    json scales = json::array();
    for (const GenParams& p : report.plan.scales) {
        scales.push_back(json{{"preset", p.preset},
                              {"n_targets", p.n_targets},
                              {"n_uavs", p.n_uavs},
                              {"area_side", p.area_side},
                              {"reward_range", {p.reward_range.first, p.reward_range.second}},
                              {"service_time_range",
                               {p.service_time_range.first, p.service_time_range.second}},
                              {"speed_range", {p.speed_range.first, p.speed_range.second}},
                              {"t_max_factor", p.t_max_factor}});
    }
    json algos = json::array();
    for (Algo a : report.plan.algorithms) algos.push_back(algo_name(a));

    json plan{{"master_seed", report.plan.master_seed},
              {"instances_per_scale", report.plan.instances_per_scale},
              {"runs_per_instance", report.plan.runs_per_instance},
              {"runs_per_scale", report.plan.runs_per_scale},
              {"algorithms", algos},
              {"scales", scales},
              {"threads", report.plan.threads},
              {"sequential_timing", report.plan.sequential_timing},
              {"ga", ga_config_json(report.plan.ga)},
              {"aco", aco_config_json(report.plan.aco)},
              {"pso", pso_config_json(report.plan.pso)},
              {"oracle", oracle_limits_json(report.plan.oracle)}};

    json groups = json::array();
    for (const BenchGroupStats& g : report.groups) {
        groups.push_back(json{{"scale_index", g.scale_index},
                              {"scale", g.scale_name},
                              {"algo", algo_name(g.algo)},
                              {"cells", g.cells},
                              {"failed", g.failed},
                              {"mean_reward", g.mean_reward},
                              {"stddev_reward", g.stddev_reward},
                              {"mean_normalized_reward", g.mean_normalized_reward},
                              {"mean_wall_time_s", g.mean_wall_time},
                              {"stddev_wall_time_s", g.stddev_wall_time}});
    }

    json cells = json::array();
    for (const BenchCell& cell : report.cells) {
        cells.push_back(json{{"scale_index", cell.scale_index},
                             {"scale", cell.scale_name},
                             {"instance", cell.instance_index},
                             {"algo", algo_name(cell.algo)},
                             {"run", cell.run_index},
                             {"seed", cell.seed},
                             {"reward", cell.reward},
                             {"normalized_reward", cell.normalized_reward},
                             {"wall_time_s", cell.wall_time_s},
                             {"iterations", cell.iterations},
                             {"ok", cell.ok},
                             {"optimal", cell.optimal},
                             {"error", cell.error},
                             {"routes", cell.best_solution.routes}});
    }

    json root{{"version", report.version},
              {"cpu_model", report.cpu_model},
              {"wall_time_note", "wall_time fields are environment-dependent, not reproducible"},
              {"plan", plan},
              {"groups", groups},
              {"cells", cells}};
    return root.dump(2) + "\n";
}

std::string cpu_model_string() {
    std::ifstream in("/proc/cpuinfo");
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find("model name");
        if (pos != 0) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) break;
        std::size_t start = colon + 1;
        while (start < line.size() && line[start] == ' ') ++start;
        return line.substr(start);
    }
    return "unknown";
}

}  // namespace etop
