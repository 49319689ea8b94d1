#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "time_interval.hpp"

namespace stcube {

/// One vertex of a trajectory polyline, in cube coordinates (x, y, time * tau).
/// `jump` marks the two members of a same-time discontinuity pair; the layout
/// engine never merges such points and never moves them in time.
struct ControlPoint {
    Vec3 p;
    bool jump = false;
};

/// The polyline drawn for one maximal appearance interval of a node.
/// Times along the points never decrease; they are equal only across the two
/// members of a jump pair. A degenerate instant appearance is a single point.
struct Run {
    TimeInterval span;              // appearance interval in raw (unscaled) time
    std::vector<ControlPoint> pts;  // cube coordinates, front/back pinned to span * tau

    bool is_instant() const { return pts.size() == 1; }

    /// Position at cube time ct, clamped to the run's extent. At a jump pair
    /// the later point wins (right limit), matching half-open sampling.
    Vec2 position_at_cube_time(double ct) const {
        if (pts.size() == 1) return pts.front().p.planar();
        if (ct <= pts.front().p.t) return pts.front().p.planar();
        if (ct >= pts.back().p.t) return pts.back().p.planar();
        // Last point with t <= ct; never the final point because of the clamp above.
        auto it = std::upper_bound(pts.begin(), pts.end(), ct,
                                   [](double q, const ControlPoint& c) { return q < c.p.t; });
        const ControlPoint& a = *(it - 1);
        const ControlPoint& b = *it;
        if (b.p.t <= a.p.t) return b.p.planar();
        return lerp(a.p, b.p, (ct - a.p.t) / (b.p.t - a.p.t)).planar();
    }

    /// Sum of the planar lengths of all segments, jump pairs included.
    double planar_length() const {
        double sum = 0.0;
        for (std::size_t i = 1; i < pts.size(); ++i)
            sum += (pts[i].p.planar() - pts[i - 1].p.planar()).norm();
        return sum;
    }
};

/// All runs of one node, ordered by time and non-overlapping.
struct Trajectory {
    int node = -1;
    std::vector<Run> runs;

    const Run* run_at(double raw_t) const {
        for (const Run& r : runs)
            if (r.span.sample_contains(raw_t)) return &r;
        return nullptr;
    }
};

/// A complete drawing in the space-time cube: one trajectory per node, plus
/// the time-to-space conversion factor tau and the ideal edge length delta.
struct SpaceTimeDrawing {
    std::vector<Trajectory> trajectories;  // indexed by node id
    std::vector<std::string> node_names;   // parallel to trajectories
    double tau = 1.0;
    double delta = 1.0;

    int node_count() const { return static_cast<int>(trajectories.size()); }

    bool present_at(int node, double raw_t) const {
        return trajectories[static_cast<std::size_t>(node)].run_at(raw_t) != nullptr;
    }

    /// Planar position at raw time t under half-open run sampling, or nothing
    /// when the node is absent.
    std::optional<Vec2> position_at(int node, double raw_t) const {
        const Run* r = trajectories[static_cast<std::size_t>(node)].run_at(raw_t);
        if (!r) return std::nullopt;
        return r->position_at_cube_time(raw_t * tau);
    }
};

/// A trajectory points violation: time went backwards, or stood still outside
/// a jump pair.
struct MonotonicityError {
    int node = -1;
    int run = -1;
    int segment = -1;  // index of the first point of the offending segment
};

/// Check that every run's times strictly increase, allowing equal times only
/// across jump pairs. Returns the first violation found.
inline std::optional<MonotonicityError> check_monotone(const SpaceTimeDrawing& d) {
    for (int n = 0; n < d.node_count(); ++n) {
        const Trajectory& tr = d.trajectories[static_cast<std::size_t>(n)];
        for (std::size_t r = 0; r < tr.runs.size(); ++r) {
            const auto& pts = tr.runs[r].pts;
            for (std::size_t i = 1; i < pts.size(); ++i) {
                const bool jump_pair = pts[i - 1].jump && pts[i].jump;
                const double dt = pts[i].p.t - pts[i - 1].p.t;
                if (dt < 0.0 || (dt == 0.0 && !jump_pair))
                    return MonotonicityError{n, static_cast<int>(r), static_cast<int>(i - 1)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace stcube
