#pragma once

#include <string>

#include "etop/core.hpp"

namespace etop {

// Route map as a standalone SVG string: depot black, reached targets blue,
// unreached red, marker radius proportional to reward, one polyline per UAV
// from the depot through its collected prefix. Circles carry data-id and
// data-reward, polylines data-uav and data-targets, so tests and tooling can
// parse the structure back.
std::string render_route_map(const Instance& instance, const Solution& solution);

}  // namespace etop
