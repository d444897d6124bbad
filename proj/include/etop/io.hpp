#pragma once

#include <string>

#include "etop/core.hpp"

namespace etop {

// Instance file (JSON, UTF-8):
//   { "depot": {"x", "y"},
//     "targets": [{"id", "x", "y", "reward", "service_time"}, ...],
//     "speeds": [..], "t_max": number, "meta": {...}? }
// Solution file: { "routes": [[ids...], ...] }
// Both round-trip losslessly (doubles are emitted with shortest
// round-trippable representation).

std::string instance_to_json(const Instance& instance, int indent = 2);
Instance instance_from_json(const std::string& text);

std::string solution_to_json(const Solution& solution, int indent = 2);
Solution solution_from_json(const std::string& text);

void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

Instance load_instance(const std::string& path);
void save_instance(const std::string& path, const Instance& instance);
Solution load_solution(const std::string& path);
void save_solution(const std::string& path, const Solution& solution);

}  // namespace etop
