#include "etop/core.hpp"

#include <algorithm>
#include <string>

namespace etop {

namespace {

std::string describe_vertex(int v) {
    return v == 0 ? "depot (0)" : "target " + std::to_string(v);
}

}  // namespace

Instance::Instance(Depot depot, std::vector<Target> targets, Fleet fleet, double t_max)
    : depot_(depot), targets_(std::move(targets)), fleet_(std::move(fleet)), t_max_(t_max) {
    if (fleet_.speeds.empty()) throw InvalidArgument("fleet must have at least one UAV");
    for (std::size_t k = 0; k < fleet_.speeds.size(); ++k) {
        if (!(fleet_.speeds[k] > 0.0))
            throw InvalidArgument("speed of UAV " + std::to_string(k) + " must be positive");
    }
    if (!(t_max_ > 0.0)) throw InvalidArgument("t_max must be positive");
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        const Target& t = targets_[i];
        if (t.id != static_cast<int>(i) + 1)
            throw InvalidArgument("target ids must be contiguous 1..n; slot " +
                                  std::to_string(i) + " holds id " + std::to_string(t.id));
        if (!(t.reward > 0.0))
            throw InvalidArgument("target " + std::to_string(t.id) + " reward must be positive");
        if (t.service_time < 0.0)
            throw InvalidArgument("target " + std::to_string(t.id) +
                                  " service_time must be non-negative");
    }

    const int nv = num_targets() + 1;
    dist_.assign(static_cast<std::size_t>(nv) * nv, 0.0);
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            const double d = euclid(position(i), position(j));
            dist_[static_cast<std::size_t>(i) * nv + j] = d;
            dist_[static_cast<std::size_t>(j) * nv + i] = d;
        }
    }
}

const Target& Instance::target(int id) const {
    if (id < 1 || id > num_targets())
        throw InvalidArgument("unknown target id " + std::to_string(id));
    return targets_[static_cast<std::size_t>(id) - 1];
}

Vec2 Instance::position(int vertex) const {
    if (vertex == 0) return depot_.position;
    return target(vertex).position;
}

double Instance::speed(int uav) const {
    if (uav < 0 || uav >= num_uavs())
        throw InvalidArgument("unknown UAV index " + std::to_string(uav));
    return fleet_.speeds[static_cast<std::size_t>(uav)];
}

double Instance::distance(int i, int j) const {
    const int nv = num_targets() + 1;
    if (i < 0 || i >= nv) throw InvalidArgument("unknown vertex id " + std::to_string(i));
    if (j < 0 || j >= nv) throw InvalidArgument("unknown vertex id " + std::to_string(j));
    return dist_[static_cast<std::size_t>(i) * nv + j];
}

double distance(const Instance& instance, int i, int j) {
    return instance.distance(i, j);
}

void check_solution(const Instance& instance, const Solution& solution) {
    const int n = instance.num_targets();
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t k = 0; k < solution.routes.size(); ++k) {
        for (int id : solution.routes[k]) {
            if (id < 1 || id > n)
                throw InvalidArgument("route " + std::to_string(k) + " references unknown " +
                                      describe_vertex(id));
            if (seen[static_cast<std::size_t>(id)])
                throw InvalidSolution("target " + std::to_string(id) +
                                      " appears more than once across routes");
            seen[static_cast<std::size_t>(id)] = 1;
        }
    }
    if (static_cast<int>(solution.routes.size()) > instance.num_uavs())
        throw InvalidSolution("solution has " + std::to_string(solution.routes.size()) +
                              " routes but the fleet has " +
                              std::to_string(instance.num_uavs()) + " UAVs");
}

Evaluation evaluate(const Instance& instance, const Solution& solution) {
    check_solution(instance, solution);

    const int n = instance.num_targets();
    const int k_total = instance.num_uavs();
    Evaluation eval;
    eval.per_uav_time.assign(static_cast<std::size_t>(k_total), 0.0);
    eval.collected.assign(static_cast<std::size_t>(n) + 1, 0);
    eval.truncated_at.assign(static_cast<std::size_t>(k_total), std::nullopt);

    // Per-UAV subtotals are summed in route order, then totals in UAV order,
    // so other modules can reproduce total_reward bit-exactly.
    double total = 0.0;
    for (int k = 0; k < k_total; ++k) {
        double uav_reward = 0.0;
        if (k < static_cast<int>(solution.routes.size())) {
            const auto& route = solution.routes[static_cast<std::size_t>(k)];
            const double s = instance.speed(k);
            double elapsed = 0.0;
            int pos = 0;
            for (std::size_t i = 0; i < route.size(); ++i) {
                const int id = route[i];
                const Target& t = instance.target(id);
                const double done = arrival_after(elapsed, instance.distance(pos, id), s,
                                                  t.service_time);
                if (done <= instance.t_max()) {
                    elapsed = done;
                    pos = id;
                    eval.collected[static_cast<std::size_t>(id)] = 1;
                    uav_reward += t.reward;
                    eval.per_uav_time[static_cast<std::size_t>(k)] = elapsed;
                } else {
                    eval.truncated_at[static_cast<std::size_t>(k)] = static_cast<int>(i);
                    break;
                }
            }
        }
        total += uav_reward;
    }
    eval.total_reward = total;
    return eval;
}

Solution decode(const Instance& instance, const Encoding& encoding) {
    const int n = instance.num_targets();
    const int k_total = instance.num_uavs();

    if (static_cast<int>(encoding.perm.size()) != n)
        throw InvalidEncoding("perm length " + std::to_string(encoding.perm.size()) +
                              " does not match instance with " + std::to_string(n) + " targets");
    if (static_cast<int>(encoding.breaks.size()) != k_total - 1)
        throw InvalidEncoding("breaks length " + std::to_string(encoding.breaks.size()) +
                              " does not match fleet of " + std::to_string(k_total));

    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int id : encoding.perm) {
        if (id < 1 || id > n || seen[static_cast<std::size_t>(id)])
            throw InvalidEncoding("perm is not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(id)] = 1;
    }
    int prev = 0;
    for (int b : encoding.breaks) {
        if (b < prev || b > n) throw InvalidEncoding("breaks must be sorted within [0, n]");
        prev = b;
    }

    Solution solution;
    solution.routes.resize(static_cast<std::size_t>(k_total));
    int start = 0;
    for (int k = 0; k < k_total; ++k) {
        const int end = (k < k_total - 1) ? encoding.breaks[static_cast<std::size_t>(k)] : n;
        solution.routes[static_cast<std::size_t>(k)].assign(encoding.perm.begin() + start,
                                                            encoding.perm.begin() + end);
        start = end;
    }
    return solution;
}

Encoding encode(const Instance& instance, const Solution& solution) {
    check_solution(instance, solution);

    const int n = instance.num_targets();
    int routed = 0;
    for (const auto& route : solution.routes) routed += static_cast<int>(route.size());
    if (routed != n)
        throw NotEncodable("solution routes " + std::to_string(routed) + " of " +
                           std::to_string(n) + " targets; encode needs full coverage");

    Encoding encoding;
    encoding.perm.reserve(static_cast<std::size_t>(n));
    encoding.breaks.reserve(solution.routes.empty() ? 0 : solution.routes.size() - 1);
    for (std::size_t k = 0; k < solution.routes.size(); ++k) {
        encoding.perm.insert(encoding.perm.end(), solution.routes[k].begin(),
                             solution.routes[k].end());
        if (k + 1 < solution.routes.size())
            encoding.breaks.push_back(static_cast<int>(encoding.perm.size()));
    }
    // Fewer routes than UAVs: trailing empty routes.
    while (static_cast<int>(encoding.breaks.size()) < instance.num_uavs() - 1)
        encoding.breaks.push_back(n);
    return encoding;
}

double upper_bound_reward(const Instance& instance) {
    double sum = 0.0;
    for (const Target& t : instance.targets()) sum += t.reward;
    return sum;
}

}  // namespace etop
