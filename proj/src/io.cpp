#include "etop/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace etop {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string(what) + ": " + e.what());
    }
}

double require_number(const json& obj, const char* field, const char* ctx) {
    if (!obj.contains(field) || !obj[field].is_number())
        throw InvalidArgument(std::string(ctx) + ": missing or non-numeric field \"" + field +
                              "\"");
    return obj[field].get<double>();
}

}  // namespace

std::string instance_to_json(const Instance& instance, int indent) {
    json j;
    j["depot"] = {{"x", instance.depot().position.x}, {"y", instance.depot().position.y}};
    j["targets"] = json::array();
    for (const Target& t : instance.targets()) {
        j["targets"].push_back({{"id", t.id},
                                {"x", t.position.x},
                                {"y", t.position.y},
                                {"reward", t.reward},
                                {"service_time", t.service_time}});
    }
    j["speeds"] = instance.fleet().speeds;
    j["t_max"] = instance.t_max();
    if (!instance.meta.empty()) j["meta"] = parse(instance.meta, "instance meta");
    return j.dump(indent) + "\n";
}

Instance instance_from_json(const std::string& text) {
    const json j = parse(text, "instance");
    if (!j.is_object()) throw InvalidArgument("instance: top level must be a JSON object");
    if (!j.contains("depot") || !j["depot"].is_object())
        throw InvalidArgument("instance: missing \"depot\" object");
    if (!j.contains("targets") || !j["targets"].is_array())
        throw InvalidArgument("instance: missing \"targets\" array");
    if (!j.contains("speeds") || !j["speeds"].is_array())
        throw InvalidArgument("instance: missing \"speeds\" array");

    Depot depot;
    depot.position.x = require_number(j["depot"], "x", "instance depot");
    depot.position.y = require_number(j["depot"], "y", "instance depot");

    std::vector<Target> targets;
    targets.reserve(j["targets"].size());
    for (std::size_t i = 0; i < j["targets"].size(); ++i) {
        const json& tj = j["targets"][i];
        const std::string ctx = "instance target[" + std::to_string(i) + "]";
        if (!tj.is_object()) throw InvalidArgument(ctx + ": must be an object");
        Target t;
        t.id = static_cast<int>(require_number(tj, "id", ctx.c_str()));
        t.position.x = require_number(tj, "x", ctx.c_str());
        t.position.y = require_number(tj, "y", ctx.c_str());
        t.reward = require_number(tj, "reward", ctx.c_str());
        t.service_time = require_number(tj, "service_time", ctx.c_str());
        targets.push_back(t);
    }

    Fleet fleet;
    for (const json& s : j["speeds"]) {
        if (!s.is_number()) throw InvalidArgument("instance: non-numeric speed entry");
        fleet.speeds.push_back(s.get<double>());
    }

    const double t_max = require_number(j, "t_max", "instance");

    Instance instance(depot, std::move(targets), std::move(fleet), t_max);
    if (j.contains("meta")) instance.meta = j["meta"].dump();
    return instance;
}

std::string solution_to_json(const Solution& solution, int indent) {
    json j;
    j["routes"] = solution.routes;
    return j.dump(indent) + "\n";
}

Solution solution_from_json(const std::string& text) {
    const json j = parse(text, "solution");
    if (!j.is_object() || !j.contains("routes") || !j["routes"].is_array())
        throw InvalidArgument("solution: missing \"routes\" array");
    Solution solution;
    for (const json& rj : j["routes"]) {
        if (!rj.is_array()) throw InvalidArgument("solution: each route must be an array of ids");
        std::vector<int> route;
        for (const json& id : rj) {
            if (!id.is_number_integer())
                throw InvalidArgument("solution: route entries must be integer target ids");
            route.push_back(id.get<int>());
        }
        solution.routes.push_back(std::move(route));
    }
    return solution;
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open \"" + path + "\" for writing");
    out << text;
    if (!out) throw IoError("write to \"" + path + "\" failed");
}

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open \"" + path + "\" for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Instance load_instance(const std::string& path) {
    return instance_from_json(load_text(path));
}

void save_instance(const std::string& path, const Instance& instance) {
    save_text(path, instance_to_json(instance));
}

Solution load_solution(const std::string& path) {
    return solution_from_json(load_text(path));
}

void save_solution(const std::string& path, const Solution& solution) {
    save_text(path, solution_to_json(solution));
}

}  // namespace etop
