#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "etop/core.hpp"

namespace etop {

// Seeded random instance generation. Each field family (positions, rewards,
// service times, speeds) draws from an independent stream derived from the
// master seed, so adding families later cannot shift existing instances.
struct GenParams {
    int n_targets = 30;
    int n_uavs = 5;
    double area_side = 100.0;
    std::pair<double, double> reward_range{1.0, 10.0};
    std::pair<double, double> service_time_range{0.1, 1.0};
    std::pair<double, double> speed_range{0.5, 1.5};
    double t_max_factor = 1.5;
    std::uint64_t seed = 0;
    std::string preset;  // set by scale_preset, "" for custom parameters
};

// name in {small, medium, large}: UAV/target counts 5/30, 10/60, 15/90.
GenParams scale_preset(const std::string& name);

// Depot at the area center, target positions i.i.d. uniform over the square,
// rewards / service times / speeds i.i.d. uniform over their ranges,
// t_max = t_max_factor * (area_side / mean generated speed). Bit-identical
// output for identical params.
Instance generate(const GenParams& params);

}  // namespace etop
