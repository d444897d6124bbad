#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "etop/bench.hpp"
#include "etop/config_json.hpp"
#include "etop/core.hpp"
#include "etop/errors.hpp"
#include "etop/gen.hpp"
#include "etop/io.hpp"
#include "etop/oracle.hpp"
#include "etop/svg.hpp"
#include "etop/version.hpp"

namespace {

using nlohmann::json;

// Content problems in data files map to exit 1 (domain failure), unlike
// flag/config mistakes which map to exit 2.
struct DataError : etop::Error {
    using Error::Error;
};

std::uint64_t env_seed() {
    const char* env = std::getenv("ETOP_SEED");
    if (env == nullptr || *env == '\0') return 0;
    errno = 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (errno != 0 || end == nullptr || *end != '\0')
        throw etop::InvalidArgument("ETOP_SEED must be an unsigned 64-bit integer");
    return static_cast<std::uint64_t>(value);
}

etop::Instance cli_load_instance(const std::string& path) {
    try {
        return etop::load_instance(path);
    } catch (const etop::InvalidArgument& e) {
        throw DataError(e.what());
    }
}

etop::Solution cli_load_solution(const std::string& path) {
    try {
        return etop::load_solution(path);
    } catch (const etop::InvalidArgument& e) {
        throw DataError(e.what());
    }
}

std::string fmt_exact(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

json load_config_file(const std::string& path) {
    if (path.empty()) return json::object();
    const std::string text = etop::load_text(path);
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::parse_error& e) {
        throw etop::InvalidArgument(std::string("config file: ") + e.what());
    }
    if (!parsed.is_object()) throw etop::InvalidArgument("config file: expected a JSON object");
    for (const auto& item : parsed.items()) {
        if (item.key() != "ga" && item.key() != "aco" && item.key() != "pso" &&
            item.key() != "oracle")
            throw etop::InvalidArgument("config file: unknown section '" + item.key() + "'");
    }
    return parsed;
}

void log_resolved(const json& resolved) {
    std::fprintf(stderr, "resolved config: %s\n", resolved.dump().c_str());
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

struct GenerateArgs {
    std::string scale;
    std::string out = "instance.json";
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    int targets = 0;
    int uavs = 0;
    double area = 0.0;
    double reward_min = 0.0, reward_max = 0.0;
    double service_min = 0.0, service_max = 0.0;
    double speed_min = 0.0, speed_max = 0.0;
    double t_max_factor = 0.0;
    CLI::App* cmd = nullptr;
};

json gen_params_json(const etop::GenParams& p) {
    return json{{"preset", p.preset},
                {"n_targets", p.n_targets},
                {"n_uavs", p.n_uavs},
                {"area_side", p.area_side},
                {"reward_range", {p.reward_range.first, p.reward_range.second}},
                {"service_time_range", {p.service_time_range.first, p.service_time_range.second}},
                {"speed_range", {p.speed_range.first, p.speed_range.second}},
                {"t_max_factor", p.t_max_factor},
                {"seed", p.seed}};
}

int cmd_generate(const GenerateArgs& args) {
    etop::GenParams params;
    if (!args.scale.empty()) params = etop::scale_preset(args.scale);
    if (args.cmd->count("--targets")) params.n_targets = args.targets;
    if (args.cmd->count("--uavs")) params.n_uavs = args.uavs;
    if (args.cmd->count("--area")) params.area_side = args.area;
    if (args.cmd->count("--reward-min")) params.reward_range.first = args.reward_min;
    if (args.cmd->count("--reward-max")) params.reward_range.second = args.reward_max;
    if (args.cmd->count("--service-min")) params.service_time_range.first = args.service_min;
    if (args.cmd->count("--service-max")) params.service_time_range.second = args.service_max;
    if (args.cmd->count("--speed-min")) params.speed_range.first = args.speed_min;
    if (args.cmd->count("--speed-max")) params.speed_range.second = args.speed_max;
    if (args.cmd->count("--tmax-factor")) params.t_max_factor = args.t_max_factor;
    params.seed = args.seed_opt->count() > 0 ? args.seed : env_seed();

    log_resolved(json{{"command", "generate"}, {"out", args.out}, {"gen", gen_params_json(params)}});

    const etop::Instance instance = etop::generate(params);
    etop::save_instance(args.out, instance);
    std::printf("n=%d K=%d t_max=%s\nwrote %s\n", instance.num_targets(), instance.num_uavs(),
                fmt_exact(instance.t_max()).c_str(), args.out.c_str());
    return 0;
}

struct SolveArgs {
    std::string instance_path;
    std::string algo = "ga";
    std::string config_path;
    std::string out = "solution.json";
    std::string result_path;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    int threads = 1;
    CLI::Option* threads_opt = nullptr;
};

std::string default_result_path(const std::string& solution_path) {
    const std::string suffix = ".json";
    if (solution_path.size() > suffix.size() &&
        solution_path.compare(solution_path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return solution_path.substr(0, solution_path.size() - suffix.size()) + ".result.json";
    return solution_path + ".result.json";
}

int cmd_solve(const SolveArgs& args) {
    const etop::Instance instance = cli_load_instance(args.instance_path);
    const json config_file = load_config_file(args.config_path);
    const std::uint64_t fallback = env_seed();

    etop::GaConfig ga;
    etop::AcoConfig aco;
    etop::PsoConfig pso;
    etop::OracleLimits oracle;
    ga.seed = aco.seed = pso.seed = fallback;
    if (config_file.contains("ga")) etop::apply_ga_overrides(ga, config_file["ga"]);
    if (config_file.contains("aco")) etop::apply_aco_overrides(aco, config_file["aco"]);
    if (config_file.contains("pso")) etop::apply_pso_overrides(pso, config_file["pso"]);
    if (config_file.contains("oracle")) etop::apply_oracle_overrides(oracle, config_file["oracle"]);
    if (args.seed_opt->count() > 0) ga.seed = aco.seed = pso.seed = args.seed;
    if (args.threads_opt->count() > 0) aco.threads = pso.threads = args.threads;

    json resolved{{"command", "solve"},
                  {"instance", args.instance_path},
                  {"algo", args.algo},
                  {"out", args.out},
                  {"result", args.result_path}};

    etop::SolveResult solved;
    std::optional<bool> optimal;
    json algo_config;
    if (args.algo == "ga") {
        algo_config = etop::ga_config_json(ga);
        resolved["config"] = algo_config;
        log_resolved(resolved);
        solved = etop::solve_ga(instance, ga);
    } else if (args.algo == "aco") {
        algo_config = etop::aco_config_json(aco);
        resolved["config"] = algo_config;
        log_resolved(resolved);
        solved = etop::solve_aco(instance, aco);
    } else if (args.algo == "pso") {
        algo_config = etop::pso_config_json(pso);
        resolved["config"] = algo_config;
        log_resolved(resolved);
        solved = etop::solve_pso(instance, pso);
    } else {
        algo_config = etop::oracle_limits_json(oracle);
        resolved["config"] = algo_config;
        log_resolved(resolved);
        etop::OracleResult exact = etop::solve_exact(instance, oracle);
        solved = std::move(exact.result);
        optimal = exact.optimal;
    }

    etop::save_solution(args.out, solved.best_solution);

    json result{{"version", etop::kVersion},
                {"algo", args.algo},
                {"instance", args.instance_path},
                {"solution", args.out},
                {"reward", solved.best_reward},
                {"wall_time_s", solved.wall_time_s},
                {"iterations", solved.iterations_run},
                {"reward_history", solved.reward_history},
                {"config", algo_config}};
    if (optimal.has_value()) result["optimal"] = *optimal;
    etop::save_text(args.result_path, result.dump(2) + "\n");

    std::printf("algo=%s reward=%s wall_time_s=%s\nwrote %s and %s\n", args.algo.c_str(),
                fmt_exact(solved.best_reward).c_str(), fmt_exact(solved.wall_time_s).c_str(),
                args.out.c_str(), args.result_path.c_str());
    return 0;
}

struct BenchArgs {
    std::string scales = "small,medium,large";
    int instances = 10;
    int runs = 10;
    CLI::Option* runs_opt = nullptr;
    std::string algos = "ga,aco,pso";
    std::uint64_t master_seed = 0;
    CLI::Option* seed_opt = nullptr;
    bool full = false;
    int threads = 1;
    bool sequential_timing = false;
    std::string config_path;
    std::string out_prefix = "bench";
};

int cmd_bench(const BenchArgs& args) {
    const std::uint64_t master =
        args.seed_opt->count() > 0 ? args.master_seed : env_seed();
    etop::BenchPlan plan = etop::default_plan(master, args.full);

    plan.scales.clear();
    for (const std::string& name : split_csv(args.scales))
        plan.scales.push_back(etop::scale_preset(name));
    // The reduced medium/large run counts only fit the stock three-scale
    // plan; any other scale list falls back to the uniform count.
    if (plan.runs_per_scale.size() != plan.scales.size()) plan.runs_per_scale.clear();
    if (args.runs_opt->count() > 0) {
        plan.runs_per_instance = args.runs;
        plan.runs_per_scale.clear();
    }
    plan.instances_per_scale = args.instances;

    plan.algorithms.clear();
    for (const std::string& name : split_csv(args.algos)) {
        const auto algo = etop::algo_from_name(name);
        if (!algo) throw etop::InvalidArgument("unknown algorithm '" + name + "'");
        plan.algorithms.push_back(*algo);
    }

    const json config_file = load_config_file(args.config_path);
    if (config_file.contains("ga")) etop::apply_ga_overrides(plan.ga, config_file["ga"]);
    if (config_file.contains("aco")) etop::apply_aco_overrides(plan.aco, config_file["aco"]);
    if (config_file.contains("pso")) etop::apply_pso_overrides(plan.pso, config_file["pso"]);
    if (config_file.contains("oracle"))
        etop::apply_oracle_overrides(plan.oracle, config_file["oracle"]);
    plan.threads = args.threads;
    plan.sequential_timing = args.sequential_timing;

    json scales = json::array();
    for (const etop::GenParams& p : plan.scales) scales.push_back(gen_params_json(p));
    log_resolved(json{{"command", "bench"},
                      {"master_seed", plan.master_seed},
                      {"instances_per_scale", plan.instances_per_scale},
                      {"runs_per_instance", plan.runs_per_instance},
                      {"runs_per_scale", plan.runs_per_scale},
                      {"algorithms", split_csv(args.algos)},
                      {"scales", scales},
                      {"threads", plan.threads},
                      {"sequential_timing", plan.sequential_timing},
                      {"ga", etop::ga_config_json(plan.ga)},
                      {"aco", etop::aco_config_json(plan.aco)},
                      {"pso", etop::pso_config_json(plan.pso)},
                      {"oracle", etop::oracle_limits_json(plan.oracle)},
                      {"out_prefix", args.out_prefix}});

    const etop::BenchReport report = etop::run_bench(plan);

    const std::string json_path = args.out_prefix + ".json";
    const std::string csv_path = args.out_prefix + ".csv";
    const std::string dat_path = args.out_prefix + ".dat";
    etop::save_text(json_path, etop::report_to_json(report));
    etop::save_text(csv_path, etop::cells_csv(report));
    etop::save_text(dat_path, etop::gnuplot_columns(report));

    std::fputs(etop::compare_table(report).c_str(), stdout);
    std::printf("wrote %s %s %s\n", json_path.c_str(), csv_path.c_str(), dat_path.c_str());
    return 0;
}

int cmd_plot(const std::string& instance_path, const std::string& solution_path,
             const std::string& out) {
    const etop::Instance instance = cli_load_instance(instance_path);
    const etop::Solution solution = cli_load_solution(solution_path);
    log_resolved(json{{"command", "plot"},
                      {"instance", instance_path},
                      {"solution", solution_path},
                      {"out", out}});
    try {
        etop::check_solution(instance, solution);
    } catch (const etop::Error& e) {
        throw DataError(std::string("instance/solution mismatch: ") + e.what());
    }
    etop::save_text(out, etop::render_route_map(instance, solution));
    std::printf("wrote %s\n", out.c_str());
    return 0;
}

int cmd_validate(const std::string& instance_path, const std::string& solution_path) {
    const etop::Instance instance = cli_load_instance(instance_path);
    const etop::Solution solution = cli_load_solution(solution_path);
    log_resolved(
        json{{"command", "validate"}, {"instance", instance_path}, {"solution", solution_path}});

    try {
        etop::check_solution(instance, solution);
    } catch (const etop::Error& e) {
        std::printf("feasible: no\nreason: %s\n", e.what());
        return 1;
    }

    const etop::Evaluation eval = etop::evaluate(instance, solution);
    int collected = 0;
    for (int id = 1; id <= instance.num_targets(); ++id)
        if (eval.collected[static_cast<std::size_t>(id)]) ++collected;

    std::printf("feasible: yes\n");
    std::printf("reward: %s\n", fmt_exact(eval.total_reward).c_str());
    std::printf("collected: %d of %d targets\n", collected, instance.num_targets());
    for (std::size_t k = 0; k < solution.routes.size(); ++k) {
        std::printf("uav %zu: %zu targets, completion time %s", k, solution.routes[k].size(),
                    fmt_exact(eval.per_uav_time[k]).c_str());
        if (eval.truncated_at[k])
            std::printf(" (deadline cuts the route at position %d)", *eval.truncated_at[k]);
        std::printf("\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Team-orienteering solver and benchmark harness"};
    app.set_version_flag("--version", etop::kVersion);
    app.require_subcommand(1);

    const std::vector<std::string> scale_names{"small", "medium", "large"};

    GenerateArgs gen_args;
    CLI::App* gen = app.add_subcommand("generate", "Generate a random instance file");
    gen_args.cmd = gen;
    gen->add_option("--scale", gen_args.scale, "Preset scale")
        ->check(CLI::IsMember(scale_names));
    gen->add_option("--targets", gen_args.targets, "Number of targets");
    gen->add_option("--uavs", gen_args.uavs, "Number of UAVs");
    gen->add_option("--area", gen_args.area, "Square area side length");
    gen->add_option("--reward-min", gen_args.reward_min, "Reward range low end");
    gen->add_option("--reward-max", gen_args.reward_max, "Reward range high end");
    gen->add_option("--service-min", gen_args.service_min, "Service time range low end");
    gen->add_option("--service-max", gen_args.service_max, "Service time range high end");
    gen->add_option("--speed-min", gen_args.speed_min, "Speed range low end");
    gen->add_option("--speed-max", gen_args.speed_max, "Speed range high end");
    gen->add_option("--tmax-factor", gen_args.t_max_factor, "Deadline factor");
    gen_args.seed_opt = gen->add_option("--seed", gen_args.seed, "Generator seed");
    gen->add_option("-o,--out", gen_args.out, "Output instance path");

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("-i,--instance", solve_args.instance_path, "Instance path")->required();
    solve->add_option("--algo", solve_args.algo, "Algorithm")
        ->check(CLI::IsMember({"ga", "aco", "pso", "exact"}));
    solve_args.seed_opt = solve->add_option("--seed", solve_args.seed, "Solver seed");
    solve->add_option("--config", solve_args.config_path, "Solver config JSON file");
    solve_args.threads_opt =
        solve->add_option("--threads", solve_args.threads, "Worker threads (aco/pso)");
    solve->add_option("-o,--out", solve_args.out, "Output solution path");
    solve->add_option("--result", solve_args.result_path, "Output result path");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Run the repeated-experiment protocol");
    bench->add_option("--scales", bench_args.scales, "Comma-separated scale presets");
    bench->add_option("--instances", bench_args.instances, "Instances per scale");
    bench_args.runs_opt = bench->add_option("--runs", bench_args.runs, "Runs per instance");
    bench->add_option("--algos", bench_args.algos, "Comma-separated algorithms");
    bench_args.seed_opt =
        bench->add_option("--master-seed", bench_args.master_seed, "Master seed");
    bench->add_flag("--full", bench_args.full, "Full 10x10 grid on every scale");
    bench->add_option("--threads", bench_args.threads, "Parallel cell workers");
    bench->add_flag("--sequential-timing", bench_args.sequential_timing,
                    "Run cells one at a time for clean timings");
    bench->add_option("--config", bench_args.config_path, "Solver config JSON file");
    bench->add_option("-o,--out", bench_args.out_prefix, "Output path prefix");

    std::string plot_instance, plot_solution, plot_out = "routes.svg";
    CLI::App* plot = app.add_subcommand("plot", "Render a route map SVG");
    plot->add_option("-i,--instance", plot_instance, "Instance path")->required();
    plot->add_option("-s,--solution", plot_solution, "Solution path")->required();
    plot->add_option("-o,--out", plot_out, "Output SVG path");

    std::string val_instance, val_solution;
    CLI::App* validate = app.add_subcommand("validate", "Check a solution against an instance");
    validate->add_option("-i,--instance", val_instance, "Instance path")->required();
    validate->add_option("-s,--solution", val_solution, "Solution path")->required();

    try {
        app.parse(argc, argv);
        if (solve_args.result_path.empty())
            solve_args.result_path = default_result_path(solve_args.out);

        if (gen->parsed()) return cmd_generate(gen_args);
        if (solve->parsed()) return cmd_solve(solve_args);
        if (bench->parsed()) return cmd_bench(bench_args);
        if (plot->parsed()) return cmd_plot(plot_instance, plot_solution, plot_out);
        if (validate->parsed()) return cmd_validate(val_instance, val_solution);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const etop::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 3;
    } catch (const DataError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const etop::InvalidSolution& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const etop::InvalidEncoding& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const etop::TooLarge& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const etop::InvalidArgument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
