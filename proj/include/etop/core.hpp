#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etop/errors.hpp"

namespace etop {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double euclid(Vec2 a, Vec2 b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

// Target ids are 1..n; vertex 0 is the depot everywhere in this library.
struct Target {
    int id = 0;
    Vec2 position;
    double reward = 0.0;        // > 0
    double service_time = 0.0;  // >= 0, elapses before the reward counts
};

struct Depot {
    Vec2 position;
};

struct Fleet {
    std::vector<double> speeds;  // one per UAV, all > 0
};

// Immutable problem instance: depot, targets, fleet speeds, global deadline.
// Distances are Euclidean between stored positions, precomputed on
// construction; the matrix is symmetric with zero diagonal by construction.
class Instance {
public:
    Instance(Depot depot, std::vector<Target> targets, Fleet fleet, double t_max);

    int num_targets() const { return static_cast<int>(targets_.size()); }
    int num_uavs() const { return static_cast<int>(fleet_.speeds.size()); }

    const Target& target(int id) const;  // id in 1..n
    Vec2 position(int vertex) const;     // vertex 0 = depot
    double speed(int uav) const;         // uav in 0..|K|-1
    double t_max() const { return t_max_; }

    const Depot& depot() const { return depot_; }
    const std::vector<Target>& targets() const { return targets_; }
    const Fleet& fleet() const { return fleet_; }

    // Distance between vertices; throws InvalidArgument on unknown ids.
    double distance(int i, int j) const;

    // Provenance blob (serialized JSON object), carried through instance
    // files untouched. Empty means absent.
    std::string meta;

private:
    Depot depot_;
    std::vector<Target> targets_;
    Fleet fleet_;
    double t_max_;
    std::vector<double> dist_;  // (n+1) x (n+1), row-major
};

// Ordered open routes, one per UAV. Routes start at the depot and end at
// their last target; no return leg exists or is ever charged.
struct Solution {
    std::vector<std::vector<int>> routes;
};

// Permutation of 1..n plus |K|-1 sorted division points in [0, n]; the
// chromosome shared by the GA and PSO decoders.
struct Encoding {
    std::vector<int> perm;
    std::vector<int> breaks;
};

struct Evaluation {
    double total_reward = 0.0;
    // Service-completion time of each UAV's last collected target (0 when
    // nothing was collected). Always <= t_max.
    std::vector<double> per_uav_time;
    // Indexed by target id; slot 0 unused.
    std::vector<std::uint8_t> collected;
    // Route index of the first uncollectible target, per UAV; unset when the
    // whole route fits the deadline.
    std::vector<std::optional<int>> truncated_at;
};

// Shared time-accumulation step. Every feasibility decision in the library
// (evaluator, ACO construction, oracle search) goes through this expression
// so their arithmetic agrees bit-for-bit.
inline double arrival_after(double elapsed, double dist, double speed, double service) {
    return elapsed + dist / speed + service;
}

double distance(const Instance& instance, int i, int j);

// Throws InvalidArgument for unknown target ids, InvalidSolution for a
// target appearing more than once across routes.
void check_solution(const Instance& instance, const Solution& solution);

// Walks each route from the depot, accumulating travel time d/s plus service
// time. A target is collected iff its service completes within t_max; the
// route is truncated at the first uncollectible target (no further travel).
Evaluation evaluate(const Instance& instance, const Solution& solution);

// Route k is the perm slice between breaks[k-1] and breaks[k] (with virtual
// breaks 0 and n at the ends). Empty slices give empty routes.
Solution decode(const Instance& instance, const Encoding& encoding);

// Inverse of decode; requires the solution to route every target exactly
// once, otherwise throws NotEncodable.
Encoding encode(const Instance& instance, const Solution& solution);

// Sum of all target rewards.
double upper_bound_reward(const Instance& instance);

// Common result type for all solvers. wall_time_s is environment-dependent;
// every other field is a pure function of (instance, config, seed).
struct SolveResult {
    Solution best_solution;
    double best_reward = 0.0;
    double wall_time_s = 0.0;
    long iterations_run = 0;
    std::vector<double> reward_history;  // best-so-far, non-decreasing
};

}  // namespace etop
