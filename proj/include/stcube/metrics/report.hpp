#pragma once

#include <chrono>
#include <cmath>
#include <limits>

#include "crowding.hpp"
#include "movement.hpp"
#include "scale.hpp"
#include "slice.hpp"
#include "stress.hpp"

namespace stcube {

struct MetricsReport {
    double stress_on_d = 0.0;
    double stress_off_d = 0.0;
    double stress_on_c = 0.0;
    double stress_off_c = 0.0;
    double movement = 0.0;
    long crowding = 0;
    double runtime_seconds = 0.0;
    double scale = 1.0;
    int scale_exponent = 0;
    bool scale_interior = true;
};

/// Evaluate a drawing: search the best scale on discrete-presence on-slice
/// stress, then compute every metric at that scale. The node diameter for
/// crowding is given in post-scaling units. When layout_seconds is provided
/// it is reported as the runtime; otherwise the metric computation is timed.
inline MetricsReport full_report(const SpaceTimeDrawing& d, const ContinuousDynamicGraph& g,
                                 const std::vector<double>& slice_times, int between = 1,
                                 double layout_seconds =
                                     std::numeric_limits<double>::quiet_NaN(),
                                 double node_diameter = 0.2) {
    const auto t_begin = std::chrono::steady_clock::now();
    MetricsReport r;

    const ScaleSearch search = best_scale(d, g, slice_times, Presence::Discrete);
    r.scale = search.scale;
    r.scale_exponent = search.exponent;
    r.scale_interior = search.interior;

    const auto on_off_d =
        stress_aggregates(d, g, slice_times, Presence::Discrete, r.scale, between);
    r.stress_on_d = on_off_d.first;
    r.stress_off_d = on_off_d.second;
    const auto on_off_c =
        stress_aggregates(d, g, slice_times, Presence::Continuous, r.scale, between);
    r.stress_on_c = on_off_c.first;
    r.stress_off_c = on_off_c.second;

    r.movement = movement(d, r.scale);
    r.crowding = crowding(d, node_diameter / r.scale);

    const auto t_end = std::chrono::steady_clock::now();
    r.runtime_seconds =
        std::isnan(layout_seconds)
            ? std::chrono::duration<double>(t_end - t_begin).count()
            : layout_seconds;
    return r;
}

}  // namespace stcube
