#pragma once

#include <cmath>
#include <vector>

#include "../geometry.hpp"
#include "../graph.hpp"
#include "../segment_index.hpp"
#include "../trajectory.hpp"
#include "config.hpp"

namespace stcube {

/// Per control point of every trajectory: the force accumulated this
/// iteration and the movement applied in the previous one.
struct MovementField {
    using Grid = std::vector<std::vector<std::vector<Vec3>>>;  // [node][run][point]

    Grid force;
    Grid prev;

    static Grid grid_like(const SpaceTimeDrawing& d) {
        Grid g;
        g.resize(d.trajectories.size());
        for (std::size_t n = 0; n < d.trajectories.size(); ++n) {
            g[n].resize(d.trajectories[n].runs.size());
            for (std::size_t r = 0; r < d.trajectories[n].runs.size(); ++r)
                g[n][r].assign(d.trajectories[n].runs[r].pts.size(), Vec3{});
        }
        return g;
    }

    static MovementField zero_like(const SpaceTimeDrawing& d) {
        MovementField f;
        f.force = grid_like(d);
        f.prev = grid_like(d);
        return f;
    }

    /// Reset the force grid to zeros matching the drawing's current shape;
    /// the previous-movement grid is left as is.
    void reset_force(const SpaceTimeDrawing& d) { force = grid_like(d); }

    Vec3& of(int node, int run, int pt) {
        return force[static_cast<std::size_t>(node)][static_cast<std::size_t>(run)]
                    [static_cast<std::size_t>(pt)];
    }
    const Vec3& of(int node, int run, int pt) const {
        return force[static_cast<std::size_t>(node)][static_cast<std::size_t>(run)]
                    [static_cast<std::size_t>(pt)];
    }
    const Vec3& prev_of(int node, int run, int pt) const {
        return prev[static_cast<std::size_t>(node)][static_cast<std::size_t>(run)]
                   [static_cast<std::size_t>(pt)];
    }
};

/// Repulsion between trajectories: every control point is pushed away from
/// nearby segments of other nodes. Point-to-segment when the projection falls
/// inside a non-degenerate segment, with the reaction split between the
/// segment's endpoints; otherwise two point-to-point interactions. Magnitude
/// w * delta^2 / d^2, floored at d = delta/10, zero at or beyond the cutoff.
inline void force_node_repulsion(const SpaceTimeDrawing& d, const SegmentIndex& index,
                                 const LayoutConfig& cfg, MovementField& out) {
    const double w = cfg.weights.repulsion;
    if (w == 0.0) return;
    const double cutoff = cfg.cutoff();
    const double floor_d = cfg.delta / 10.0;
    const double delta_sq = cfg.delta * cfg.delta;

    auto point_pair = [&](const Vec3& a, Vec3& fa, Vec3& fe, const Vec3& e) {
        const Vec3 diff = a - e;
        const double dist = diff.norm();
        if (dist <= 0.0 || dist >= cutoff) return;
        const double dd = std::max(dist, floor_d);
        const double mag = w * delta_sq / (dd * dd);
        const Vec3 f = diff * (mag / dist);
        fa += f;
        fe -= f;
    };

    for (int n = 0; n < d.node_count(); ++n) {
        const Trajectory& tr = d.trajectories[static_cast<std::size_t>(n)];
        for (std::size_t r = 0; r < tr.runs.size(); ++r) {
            const Run& run = tr.runs[r];
            if (run.is_instant()) continue;
            for (std::size_t i = 0; i < run.pts.size(); ++i) {
                const Vec3& a = run.pts[i].p;
                const SegmentRecord probe =
                    SegmentRecord::of(n, static_cast<int>(r), static_cast<int>(i), a, a);
                Vec3& fa = out.of(n, static_cast<int>(r), static_cast<int>(i));

                for (int id : index.nearby(probe, cutoff)) {
                    const SegmentRecord& s = index.segments()[static_cast<std::size_t>(id)];
                    if (point_segment_distance(a, s.a, s.b) >= cutoff) continue;

                    Vec3& fc = out.of(s.node, s.run, s.segment);
                    Vec3& fd = out.of(s.node, s.run, s.segment + 1);

                    const Vec3 cd = s.b - s.a;
                    const double len_sq = cd.norm_sq();
                    bool projected = false;
                    if (len_sq > 0.0 && !collinear(a, s.a, s.b)) {
                        const double u = (a - s.a).dot(cd) / len_sq;
                        if (0.0 <= u && u <= 1.0) {
                            const Vec3 p = s.a + cd * u;
                            const Vec3 diff = a - p;
                            const double dist = diff.norm();
                            if (dist > 0.0 && dist < cutoff) {
                                const double dd = std::max(dist, floor_d);
                                const double mag = w * delta_sq / (dd * dd);
                                const Vec3 f = diff * (mag / dist);
                                fa += f;
                                fc -= f * (1.0 - u);
                                fd -= f * u;
                            }
                            projected = true;
                        }
                    }
                    if (!projected) {
                        point_pair(a, fa, fc, s.a);
                        point_pair(a, fa, fd, s.b);
                    }
                }
            }
        }
    }
}

namespace detail {

/// Point of segment a->b at cube time t (requires a.t < t-range covering b.t).
inline Vec3 at_time(const Vec3& a, const Vec3& b, double t) {
    return lerp(a, b, (t - a.t) / (b.t - a.t));
}

/// Planar contraction pulling x toward y when they are farther apart than
/// delta: magnitude w * (dist - delta) / delta.
inline Vec2 contraction(const Vec2& x, const Vec2& y, double delta, double w) {
    const Vec2 diff = y - x;
    const double dist = diff.norm();
    if (dist <= delta) return {0.0, 0.0};
    return diff * (w * (dist - delta) / (delta * dist));
}

}  // namespace detail

/// Attraction between trajectories joined by an edge, active only over the
/// intervals where the edge is present. For each pair of segments overlapping
/// a presence interval, contraction forces are computed at the earliest and
/// latest common times and redistributed to the four segment endpoints,
/// weighted by distance from the application point and presence coverage.
inline void force_edge_attraction(const SpaceTimeDrawing& d, const ContinuousDynamicGraph& g,
                                  const LayoutConfig& cfg, MovementField& out) {
    const double w = cfg.weights.attraction;
    if (w == 0.0) return;

    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        const Trajectory& tu = d.trajectories[static_cast<std::size_t>(edge.u)];
        const Trajectory& tv = d.trajectories[static_cast<std::size_t>(edge.v)];

        for (const TimeInterval& span : edge_appearance_intervals(g, e)) {
            const double lo = span.start * d.tau;
            const double hi = span.end * d.tau;
            if (hi <= lo) continue;

            for (std::size_t ru = 0; ru < tu.runs.size(); ++ru) {
                const auto& pu = tu.runs[ru].pts;
                for (std::size_t i = 0; i + 1 < pu.size(); ++i) {
                    const Vec3& a = pu[i].p;
                    const Vec3& b = pu[i + 1].p;
                    if (b.t <= a.t) continue;  // jump pair carries no duration
                    const double fu_lo = std::max(a.t, lo);
                    const double fu_hi = std::min(b.t, hi);
                    if (fu_hi <= fu_lo) continue;

                    for (std::size_t rv = 0; rv < tv.runs.size(); ++rv) {
                        const auto& pv = tv.runs[rv].pts;
                        for (std::size_t j = 0; j + 1 < pv.size(); ++j) {
                            const Vec3& c = pv[j].p;
                            const Vec3& dd = pv[j + 1].p;
                            if (dd.t <= c.t) continue;
                            const double f = std::max(fu_lo, c.t);
                            const double gt = std::min(fu_hi, dd.t);
                            if (gt <= f) continue;  // zero-length overlap: skip

                            const Vec3 m = detail::at_time(a, b, f);
                            const Vec3 n = detail::at_time(a, b, gt);
                            const Vec3 p = detail::at_time(c, dd, f);
                            const Vec3 q = detail::at_time(c, dd, gt);

                            const Vec2 fm =
                                detail::contraction(m.planar(), p.planar(), cfg.delta, w);
                            const Vec2 fn =
                                detail::contraction(n.planar(), q.planar(), cfg.delta, w);
                            if (fm == Vec2{0.0, 0.0} && fn == Vec2{0.0, 0.0}) continue;

                            // F_a = F_m * (a.t-m.t)/(a.t-b.t) * (n.t-m.t)/(a.t-b.t)
                            //     + the symmetric term for F_n; likewise for b, c, d.
                            const double du = (a.t - b.t) * (a.t - b.t);
                            const Vec2 fa = (fm * ((a.t - m.t) * (n.t - m.t)) +
                                             fn * ((a.t - n.t) * (m.t - n.t))) / du;
                            const Vec2 fb = (fm * ((b.t - m.t) * (n.t - m.t)) +
                                             fn * ((b.t - n.t) * (m.t - n.t))) / du;

                            const double dv = (c.t - dd.t) * (c.t - dd.t);
                            const Vec2 fp = fm * -1.0;
                            const Vec2 fq = fn * -1.0;
                            const Vec2 fc = (fp * ((c.t - p.t) * (q.t - p.t)) +
                                             fq * ((c.t - q.t) * (p.t - q.t))) / dv;
                            const Vec2 fd = (fp * ((dd.t - p.t) * (q.t - p.t)) +
                                             fq * ((dd.t - q.t) * (p.t - q.t))) / dv;

                            out.of(edge.u, static_cast<int>(ru), static_cast<int>(i)) +=
                                Vec3(fa, 0.0);
                            out.of(edge.u, static_cast<int>(ru), static_cast<int>(i + 1)) +=
                                Vec3(fb, 0.0);
                            out.of(edge.v, static_cast<int>(rv), static_cast<int>(j)) +=
                                Vec3(fc, 0.0);
                            out.of(edge.v, static_cast<int>(rv), static_cast<int>(j + 1)) +=
                                Vec3(fd, 0.0);
                        }
                    }
                }
            }
        }
    }
}

/// Planar pull of every control point toward the fixed center of the initial
/// placement: F = w * (c* - a*).
inline void force_gravity(const SpaceTimeDrawing& d, const LayoutConfig& cfg,
                          const Vec2& center, MovementField& out) {
    const double w = cfg.weights.gravity;
    if (w == 0.0) return;
    for (int n = 0; n < d.node_count(); ++n) {
        const Trajectory& tr = d.trajectories[static_cast<std::size_t>(n)];
        for (std::size_t r = 0; r < tr.runs.size(); ++r) {
            const Run& run = tr.runs[r];
            if (run.is_instant()) continue;
            for (std::size_t i = 0; i < run.pts.size(); ++i) {
                const Vec2 a = run.pts[i].p.planar();
                out.of(n, static_cast<int>(r), static_cast<int>(i)) +=
                    Vec3((center - a) * w, 0.0);
            }
        }
    }
}

/// Smoothing of trajectories: a bend is pulled toward the centroid of the
/// triangle formed with its neighbours (in 3D); a run endpoint is pulled in 2D
/// toward the midpoint of the segment to its only neighbour.
inline void force_straightening(const SpaceTimeDrawing& d, const LayoutConfig& cfg,
                                MovementField& out) {
    const double w = cfg.weights.straightening;
    if (w == 0.0) return;
    for (int n = 0; n < d.node_count(); ++n) {
        const Trajectory& tr = d.trajectories[static_cast<std::size_t>(n)];
        for (std::size_t r = 0; r < tr.runs.size(); ++r) {
            const auto& pts = tr.runs[r].pts;
            if (pts.size() < 2) continue;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                Vec3& f = out.of(n, static_cast<int>(r), static_cast<int>(i));
                if (i == 0 || i + 1 == pts.size()) {
                    const Vec2 a = pts[i].p.planar();
                    const Vec2 b = pts[i == 0 ? 1 : pts.size() - 2].p.planar();
                    const Vec2 mid = (a + b) * 0.5;
                    f += Vec3((mid - a) * w, 0.0);
                } else {
                    const Vec3 centroid =
                        (pts[i - 1].p + pts[i].p + pts[i + 1].p) / 3.0;
                    f += (centroid - pts[i].p) * w;
                }
            }
        }
    }
}

/// Keeps trajectory segments at small angles with the time axis: the endpoints
/// of a segment at angle alpha are pulled together in 2D with magnitude
/// |b* - a*| * alpha / (90deg - alpha). Jump pairs (no time extent) are skipped.
inline void force_mental_map(const SpaceTimeDrawing& d, const LayoutConfig& cfg,
                             MovementField& out) {
    const double w = cfg.weights.mental_map;
    if (w == 0.0) return;
    constexpr double half_pi = 1.5707963267948966;
    for (int n = 0; n < d.node_count(); ++n) {
        const Trajectory& tr = d.trajectories[static_cast<std::size_t>(n)];
        for (std::size_t r = 0; r < tr.runs.size(); ++r) {
            const auto& pts = tr.runs[r].pts;
            for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                const Vec3& a = pts[i].p;
                const Vec3& b = pts[i + 1].p;
                const double dt = b.t - a.t;
                if (dt <= 0.0) continue;
                const Vec2 planar = b.planar() - a.planar();
                const double plen = planar.norm();
                if (plen <= 0.0) continue;
                const double alpha = std::atan2(plen, dt);
                const double factor = alpha / (half_pi - alpha);
                const Vec2 fa = planar * (w * factor);
                out.of(n, static_cast<int>(r), static_cast<int>(i)) += Vec3(fa, 0.0);
                out.of(n, static_cast<int>(r), static_cast<int>(i + 1)) -= Vec3(fa, 0.0);
            }
        }
    }
}

}  // namespace stcube
