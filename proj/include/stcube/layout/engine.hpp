#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "../graph.hpp"
#include "../segment_index.hpp"
#include "../stct.hpp"
#include "../trajectory.hpp"
#include "complexity.hpp"
#include "config.hpp"
#include "constraints.hpp"
#include "forces.hpp"

namespace stcube {

/// Mutable optimizer state carried across iterations.
struct LayoutState {
    MovementField field;
    Vec2 center;  // gravity center, fixed at the initial placement
};

/// Insert bends at the given raw times wherever they fall strictly inside a
/// segment. Used by discrete mode to make bends coincide with timeslices.
inline void subdivide_at_times(SpaceTimeDrawing& d, const std::vector<double>& raw_times) {
    std::vector<double> cube_times;
    cube_times.reserve(raw_times.size());
    for (double t : raw_times) cube_times.push_back(t * d.tau);

    for (auto& tr : d.trajectories) {
        for (auto& run : tr.runs) {
            std::vector<ControlPoint> out;
            for (std::size_t i = 0; i < run.pts.size(); ++i) {
                out.push_back(run.pts[i]);
                if (i + 1 == run.pts.size()) continue;
                const Vec3& a = run.pts[i].p;
                const Vec3& b = run.pts[i + 1].p;
                if (b.t <= a.t) continue;
                for (double ct : cube_times)
                    if (a.t < ct && ct < b.t)
                        out.push_back({lerp(a, b, (ct - a.t) / (b.t - a.t)), false});
            }
            run.pts = std::move(out);
        }
    }
}

/// Random starting drawing: trajectories from the graph's appearance
/// structure, with each node's control points collapsed onto one random 2D
/// position (extruded along the time axis). Deterministic in the seed.
inline SpaceTimeDrawing initialize(const ContinuousDynamicGraph& g, const LayoutConfig& cfg) {
    SpaceTimeDrawing d = stct(g, cfg.tau, cfg.delta);

    std::mt19937_64 rng(cfg.rng_seed);
    auto unit = [&rng]() {  // uniform in [0,1), stable across library versions
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    const double side =
        cfg.delta * std::max(1.0, std::sqrt(static_cast<double>(g.node_count())));

    for (auto& tr : d.trajectories) {
        const double x = (unit() - 0.5) * side;
        const double y = (unit() - 0.5) * side;
        for (auto& run : tr.runs) {
            for (auto& cp : run.pts) {
                cp.p.x = x;
                cp.p.y = y;
            }
        }
    }
    return d;
}

/// 2D centroid of the placement: mean of each node's first control point.
inline Vec2 placement_center(const SpaceTimeDrawing& d) {
    Vec2 sum;
    int count = 0;
    for (const auto& tr : d.trajectories) {
        for (const auto& run : tr.runs) {
            if (run.pts.empty()) continue;
            sum += run.pts.front().p.planar();
            ++count;
            break;  // one sample per node; all its points coincide initially
        }
    }
    return count > 0 ? sum / count : Vec2{};
}

/// One optimization round: index the current segments, accumulate the five
/// forces, constrain, displace all control points synchronously, and (in
/// continuous mode) adjust trajectory complexity.
inline void iterate(SpaceTimeDrawing& d, const ContinuousDynamicGraph& g,
                    const LayoutConfig& cfg, int iteration, LayoutState& state) {
    state.field.reset_force(d);

    const SegmentIndex index = SegmentIndex::build(collect_segments(d));
    force_node_repulsion(d, index, cfg, state.field);
    force_edge_attraction(d, g, cfg, state.field);
    force_gravity(d, cfg, state.center, state.field);
    force_straightening(d, cfg, state.field);
    force_mental_map(d, cfg, state.field);

    apply_constraints(state.field, d, cfg, iteration);

    for (int n = 0; n < d.node_count(); ++n) {
        auto& runs = d.trajectories[static_cast<std::size_t>(n)].runs;
        for (std::size_t r = 0; r < runs.size(); ++r)
            for (std::size_t i = 0; i < runs[r].pts.size(); ++i)
                runs[r].pts[i].p += state.field.of(n, static_cast<int>(r),
                                                   static_cast<int>(i));
    }
    state.field.prev = state.field.force;

    if (cfg.mode == LayoutMode::Continuous) adjust_complexity(d, cfg, &state.field);
}

/// Full force-directed layout. In discrete mode the trajectories are first
/// subdivided at the supplied slice times; all point times then stay fixed and
/// bends are neither inserted nor removed.
inline SpaceTimeDrawing layout(const ContinuousDynamicGraph& g, const LayoutConfig& cfg,
                               const std::vector<double>& slice_times = {}) {
    if (!cfg.valid()) throw std::invalid_argument("layout: bad config");

    SpaceTimeDrawing d = initialize(g, cfg);
    if (cfg.mode == LayoutMode::Discrete && !slice_times.empty())
        subdivide_at_times(d, slice_times);

    LayoutState state{MovementField::zero_like(d), placement_center(d)};
    for (int it = 0; it < cfg.iterations; ++it) iterate(d, g, cfg, it, state);
    return d;
}

}  // namespace stcube
