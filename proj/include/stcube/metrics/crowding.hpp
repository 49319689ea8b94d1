#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "../geometry.hpp"
#include "../time_interval.hpp"
#include "../trajectory.hpp"

namespace stcube {

namespace detail {

/// One span of simultaneous linear motion of two nodes: over cube times
/// [t0, t1], their planar offset is A + B * (t - t0).
struct RelativePiece {
    double t0 = 0.0;
    double t1 = 0.0;
    Vec2 offset;    // A
    Vec2 velocity;  // B, per cube-time unit
};

inline Vec2 planar_at(const Vec3& a, const Vec3& b, double t) {
    return lerp(a, b, (t - a.t) / (b.t - a.t)).planar();
}

/// Count collision events of one co-present window of two runs: +1 if the
/// pair starts closer than the diameter, +1 per transition from apart to
/// overlapping, whether by continuous motion (quadratic roots) or by a jump.
inline long count_window_events(const Run& ru, const Run& rv, double t0, double t1,
                                double diameter) {
    const double diam_sq = diameter * diameter;

    // Degenerate window: a single shared instant.
    if (t1 <= t0) {
        const Vec2 gap = ru.position_at_cube_time(t0) - rv.position_at_cube_time(t0);
        return gap.norm_sq() < diam_sq ? 1 : 0;
    }

    // Decompose into spans where both nodes move linearly. Jump pairs carry
    // no duration and surface as discontinuities between spans.
    std::vector<RelativePiece> pieces;
    for (std::size_t i = 0; i + 1 < ru.pts.size(); ++i) {
        const Vec3& a = ru.pts[i].p;
        const Vec3& b = ru.pts[i + 1].p;
        if (b.t <= a.t) continue;
        const double ulo = std::max(a.t, t0);
        const double uhi = std::min(b.t, t1);
        if (uhi <= ulo) continue;
        for (std::size_t j = 0; j + 1 < rv.pts.size(); ++j) {
            const Vec3& c = rv.pts[j].p;
            const Vec3& d = rv.pts[j + 1].p;
            if (d.t <= c.t) continue;
            const double lo = std::max(ulo, c.t);
            const double hi = std::min(uhi, d.t);
            if (hi <= lo) continue;
            RelativePiece piece;
            piece.t0 = lo;
            piece.t1 = hi;
            piece.offset = planar_at(a, b, lo) - planar_at(c, d, lo);
            piece.velocity = (b.planar() - a.planar()) / (b.t - a.t) -
                             (d.planar() - c.planar()) / (d.t - c.t);
            pieces.push_back(piece);
        }
    }
    std::sort(pieces.begin(), pieces.end(), [](const RelativePiece& x, const RelativePiece& y) {
        return x.t0 < y.t0 || (x.t0 == y.t0 && x.t1 < y.t1);
    });

    long events = 0;
    const Vec2 start_gap = ru.position_at_cube_time(t0) - rv.position_at_cube_time(t0);
    bool inside = start_gap.norm_sq() < diam_sq;
    if (inside) ++events;

    for (const RelativePiece& piece : pieces) {
        // q(s) = |A + B s|^2 - diameter^2 over s in [0, L].
        const double c0 = piece.offset.norm_sq() - diam_sq;
        const bool at_start = c0 < 0.0;
        if (at_start && !inside) ++events;  // discontinuous entry at a jump
        inside = at_start;

        const double c2 = piece.velocity.norm_sq();
        if (c2 <= 0.0) continue;  // no relative motion in this span
        const double c1 = 2.0 * piece.offset.dot(piece.velocity);
        const double disc = c1 * c1 - 4.0 * c2 * c0;
        const double len = piece.t1 - piece.t0;
        if (disc > 0.0) {
            const double root = std::sqrt(disc);
            const double r1 = (-c1 - root) / (2.0 * c2);
            const double r2 = (-c1 + root) / (2.0 * c2);
            if (!inside && r1 < len && r2 > 0.0) ++events;
        }
        const double q_end = c0 + c1 * len + c2 * len * len;
        inside = q_end < 0.0;
    }
    return events;
}

}  // namespace detail

/// Number of collision events in the drawing: for every pair of co-present
/// nodes, count each time their 2D distance drops below the diameter, plus
/// one if a pair is already overlapping the moment it becomes co-present.
inline long crowding(const SpaceTimeDrawing& d, double diameter) {
    long events = 0;
    const int n = d.node_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            for (const Run& ru : d.trajectories[static_cast<std::size_t>(u)].runs) {
                for (const Run& rv : d.trajectories[static_cast<std::size_t>(v)].runs) {
                    const auto ov = intersect(ru.span, rv.span);
                    if (!ov) continue;
                    events += detail::count_window_events(ru, rv, ov->start * d.tau,
                                                          ov->end * d.tau, diameter);
                }
            }
        }
    }
    return events;
}

}  // namespace stcube
