#include "etop/gen.hpp"

#include "etop/rng.hpp"
#include "json.hpp"

namespace etop {

namespace {

// Stream tags; frozen, never renumber.
enum StreamTag : std::uint64_t {
    kPositions = 1,
    kRewards = 2,
    kServiceTimes = 3,
    kSpeeds = 4,
};

void check_range(std::pair<double, double> r, const char* name) {
    if (!(r.first <= r.second))
        throw InvalidArgument(std::string(name) + " range must have lo <= hi");
}

}  // namespace

GenParams scale_preset(const std::string& name) {
    GenParams p;
    p.preset = name;
    if (name == "small") {
        p.n_uavs = 5;
        p.n_targets = 30;
    } else if (name == "medium") {
        p.n_uavs = 10;
        p.n_targets = 60;
    } else if (name == "large") {
        p.n_uavs = 15;
        p.n_targets = 90;
    } else {
        throw InvalidArgument("unknown scale \"" + name + "\" (expected small|medium|large)");
    }
    return p;
}

Instance generate(const GenParams& params) {
    if (params.n_targets < 1) throw InvalidArgument("n_targets must be at least 1");
    if (params.n_uavs < 1) throw InvalidArgument("n_uavs must be at least 1");
    if (!(params.area_side > 0.0)) throw InvalidArgument("area_side must be positive");
    if (!(params.t_max_factor > 0.0)) throw InvalidArgument("t_max_factor must be positive");
    check_range(params.reward_range, "reward");
    check_range(params.service_time_range, "service_time");
    check_range(params.speed_range, "speed");
    if (!(params.reward_range.first > 0.0))
        throw InvalidArgument("reward range lower bound must be positive");
    if (params.service_time_range.first < 0.0)
        throw InvalidArgument("service_time range lower bound must be non-negative");
    if (!(params.speed_range.first > 0.0))
        throw InvalidArgument("speed range lower bound must be positive");

    Rng pos_rng(derive_seed(params.seed, {kPositions}));
    Rng reward_rng(derive_seed(params.seed, {kRewards}));
    Rng service_rng(derive_seed(params.seed, {kServiceTimes}));
    Rng speed_rng(derive_seed(params.seed, {kSpeeds}));

    std::vector<Target> targets;
    targets.reserve(static_cast<std::size_t>(params.n_targets));
    for (int i = 0; i < params.n_targets; ++i) {
        Target t;
        t.id = i + 1;
        t.position.x = pos_rng.uniform(0.0, params.area_side);
        t.position.y = pos_rng.uniform(0.0, params.area_side);
        t.reward = reward_rng.uniform(params.reward_range.first, params.reward_range.second);
        t.service_time =
            service_rng.uniform(params.service_time_range.first, params.service_time_range.second);
        targets.push_back(t);
    }

    Fleet fleet;
    fleet.speeds.reserve(static_cast<std::size_t>(params.n_uavs));
    double speed_sum = 0.0;
    for (int k = 0; k < params.n_uavs; ++k) {
        const double s = speed_rng.uniform(params.speed_range.first, params.speed_range.second);
        fleet.speeds.push_back(s);
        speed_sum += s;
    }
    const double mean_speed = speed_sum / params.n_uavs;
    const double t_max = params.t_max_factor * (params.area_side / mean_speed);

    Depot depot;
    depot.position = {params.area_side / 2.0, params.area_side / 2.0};

    Instance instance(depot, std::move(targets), std::move(fleet), t_max);

    nlohmann::json meta;
    meta["seed"] = params.seed;
    if (!params.preset.empty()) meta["scale"] = params.preset;
    meta["gen_params"] = {{"n_targets", params.n_targets},
                          {"n_uavs", params.n_uavs},
                          {"area_side", params.area_side},
                          {"reward_range", {params.reward_range.first, params.reward_range.second}},
                          {"service_time_range",
                           {params.service_time_range.first, params.service_time_range.second}},
                          {"speed_range", {params.speed_range.first, params.speed_range.second}},
                          {"t_max_factor", params.t_max_factor},
                          {"seed", params.seed}};
    instance.meta = meta.dump();
    return instance;
}

}  // namespace etop
