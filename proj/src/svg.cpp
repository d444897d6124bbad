#include "etop/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace etop {

namespace {

constexpr double kWidth = 800.0;
constexpr double kMargin = 40.0;
constexpr double kMaxMarkerRadius = 10.0;
constexpr double kDepotRadius = 4.0;

const char* kRouteColors[] = {"#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2",
                              "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a"};

std::string fmt_exact(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string fmt_coord(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

}  // namespace

std::string render_route_map(const Instance& instance, const Solution& solution) {
    const Evaluation eval = evaluate(instance, solution);
    const int n = instance.num_targets();

    double min_x = instance.position(0).x, max_x = min_x;
    double min_y = instance.position(0).y, max_y = min_y;
    double max_reward = 0.0;
    for (int id = 1; id <= n; ++id) {
        const Vec2 p = instance.position(id);
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
        max_reward = std::max(max_reward, instance.target(id).reward);
    }

    const double span_x = std::max(max_x - min_x, 1e-9);
    const double span_y = std::max(max_y - min_y, 1e-9);
    const double scale = (kWidth - 2.0 * kMargin) / span_x;
    const double height = span_y * scale + 2.0 * kMargin;

    // World y grows upward, SVG y downward.
    const auto sx = [&](double x) { return kMargin + (x - min_x) * scale; };
    const auto sy = [&](double y) { return height - (kMargin + (y - min_y) * scale); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_coord(kWidth) +
           "\" height=\"" + fmt_coord(height) + "\" viewBox=\"0 0 " + fmt_coord(kWidth) + " " +
           fmt_coord(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t k = 0; k < solution.routes.size(); ++k) {
        std::string points = fmt_coord(sx(instance.position(0).x)) + "," +
                             fmt_coord(sy(instance.position(0).y));
        std::string ids;
        for (std::size_t i = 0; i < solution.routes[k].size(); ++i) {
            const auto cut = eval.truncated_at[k];
            if (cut && static_cast<int>(i) >= *cut) break;  // travel stops here
            const int id = solution.routes[k][i];
            const Vec2 p = instance.position(id);
            points += " " + fmt_coord(sx(p.x)) + "," + fmt_coord(sy(p.y));
            if (!ids.empty()) ids += ' ';
            ids += std::to_string(id);
        }
        if (ids.empty()) continue;  // nothing collected, no traversal to draw
        const char* color = kRouteColors[k % (sizeof(kRouteColors) / sizeof(kRouteColors[0]))];
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.5\" data-uav=\"" + std::to_string(k) + "\" data-targets=\"" +
               ids + "\" points=\"" + points + "\"/>\n";
    }

    for (int id = 1; id <= n; ++id) {
        const Target& target = instance.target(id);
        const Vec2 p = instance.position(id);
        const double radius =
            max_reward > 0.0 ? kMaxMarkerRadius * target.reward / max_reward : kMaxMarkerRadius;
        const bool reached = eval.collected[static_cast<std::size_t>(id)] != 0;
        out += "<circle cx=\"" + fmt_coord(sx(p.x)) + "\" cy=\"" + fmt_coord(sy(p.y)) +
               "\" r=\"" + fmt_exact(radius) + "\" fill=\"" +
               (reached ? "#1f77b4" : "#d62728") + "\" data-id=\"" + std::to_string(id) +
               "\" data-reward=\"" + fmt_exact(target.reward) + "\"/>\n";
    }

    const Vec2 depot = instance.position(0);
    out += "<circle cx=\"" + fmt_coord(sx(depot.x)) + "\" cy=\"" + fmt_coord(sy(depot.y)) +
           "\" r=\"" + fmt_exact(kDepotRadius) + "\" fill=\"black\" data-id=\"0\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace etop
