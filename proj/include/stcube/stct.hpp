#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "trajectory.hpp"

namespace stcube {

class GraphInvalidError : public std::runtime_error {
public:
    explicit GraphInvalidError(ValidationReport report)
        : std::runtime_error(describe(report)), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

private:
    static std::string describe(const ValidationReport& r) {
        std::ostringstream os;
        os << "graph invalid: " << r.violations.size()
           << " edge presence interval(s) not covered by both endpoints";
        return os.str();
    }
    ValidationReport report_;
};

class NonMonotoneError : public std::runtime_error {
public:
    NonMonotoneError(const MonotonicityError& e, const std::string& node_name)
        : std::runtime_error(describe(e, node_name)), where_(e) {}
    const MonotonicityError& where() const { return where_; }

private:
    static std::string describe(const MonotonicityError& e, const std::string& name) {
        std::ostringstream os;
        os << "trajectory of node '" << name << "' has multiple positions at one time: run "
           << e.run << ", segment " << e.segment;
        return os.str();
    }
    MonotonicityError where_;
};

namespace detail {

/// Position approaching t from below: the value at t of the piece covering
/// times just under t, or the default.
inline Vec2 left_limit(const PiecewiseAttribute<Vec2>& attr, double t) {
    for (const auto& p : attr.pieces())
        if (p.span.start < t && t <= p.span.end)
            return p.fn.at(p.span, t);
    return attr.default_value();
}

/// Position approaching t from above.
inline Vec2 right_limit(const PiecewiseAttribute<Vec2>& attr, double t) {
    for (const auto& p : attr.pieces())
        if (p.span.start <= t && t < p.span.end)
            return p.fn.at(p.span, t);
    return attr.default_value();
}

}  // namespace detail

/// Transform a continuous dynamic graph into a drawing in the space-time cube:
/// one run per maximal appearance interval, control points at run bounds and
/// at every position breakpoint inside the run, times scaled by tau. A position
/// discontinuity becomes a same-time pair of points flagged as a jump.
inline SpaceTimeDrawing stct(const ContinuousDynamicGraph& g, double tau, double delta = 1.0) {
    ValidationReport report = validate(g);
    if (!report.ok()) throw GraphInvalidError(std::move(report));

    SpaceTimeDrawing d;
    d.tau = tau;
    d.delta = delta;
    d.trajectories.resize(static_cast<std::size_t>(g.node_count()));
    d.node_names.resize(static_cast<std::size_t>(g.node_count()));

    for (int n = 0; n < g.node_count(); ++n) {
        const auto& attr = g.node(n).position;
        Trajectory& tr = d.trajectories[static_cast<std::size_t>(n)];
        tr.node = n;
        d.node_names[static_cast<std::size_t>(n)] = g.node(n).name;

        for (const TimeInterval& span : appearance_intervals(g, n)) {
            Run run;
            run.span = span;

            if (span.is_instant()) {
                run.pts.push_back({Vec3(attr.value(span.start), span.start * tau), false});
                tr.runs.push_back(std::move(run));
                continue;
            }

            // Breakpoints of the position attribute strictly inside the run.
            std::vector<double> cuts;
            for (const auto& p : attr.pieces()) {
                if (span.start < p.span.start && p.span.start < span.end)
                    cuts.push_back(p.span.start);
                if (span.start < p.span.end && p.span.end < span.end)
                    cuts.push_back(p.span.end);
            }
            std::sort(cuts.begin(), cuts.end());
            cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

            // Run start: right limit, preceded by the exact value when the
            // boundary is closed and the position jumps there.
            {
                const Vec2 right = detail::right_limit(attr, span.start);
                if (span.start_closed) {
                    const Vec2 exact = attr.value(span.start);
                    if (exact != right) {
                        run.pts.push_back({Vec3(exact, span.start * tau), true});
                        run.pts.push_back({Vec3(right, span.start * tau), true});
                    } else {
                        run.pts.push_back({Vec3(right, span.start * tau), false});
                    }
                } else {
                    run.pts.push_back({Vec3(right, span.start * tau), false});
                }
            }

            for (double b : cuts) {
                const Vec2 left = detail::left_limit(attr, b);
                const Vec2 right = detail::right_limit(attr, b);
                if (left != right) {
                    run.pts.push_back({Vec3(left, b * tau), true});
                    run.pts.push_back({Vec3(right, b * tau), true});
                } else {
                    run.pts.push_back({Vec3(left, b * tau), false});
                }
            }

            // Run end: left limit, followed by the exact value when the
            // boundary is closed and the position jumps there.
            {
                const Vec2 left = detail::left_limit(attr, span.end);
                if (span.end_closed) {
                    const Vec2 exact = attr.value(span.end);
                    if (exact != left) {
                        run.pts.push_back({Vec3(left, span.end * tau), true});
                        run.pts.push_back({Vec3(exact, span.end * tau), true});
                    } else {
                        run.pts.push_back({Vec3(left, span.end * tau), false});
                    }
                } else {
                    run.pts.push_back({Vec3(left, span.end * tau), false});
                }
            }

            tr.runs.push_back(std::move(run));
        }
    }
    return d;
}

/// Rebuild position and appearance attributes from a drawing. The returned
/// graph has the drawing's nodes and no edges or labels. Requires trajectories
/// monotone in time.
inline ContinuousDynamicGraph stct_inverse(const SpaceTimeDrawing& d) {
    if (auto err = check_monotone(d)) {
        const auto idx = static_cast<std::size_t>(err->node);
        const std::string name =
            idx < d.node_names.size() ? d.node_names[idx] : std::to_string(err->node);
        throw NonMonotoneError(*err, name);
    }

    ContinuousDynamicGraph g;
    for (int n = 0; n < d.node_count(); ++n) {
        const std::string& name = d.node_names[static_cast<std::size_t>(n)];
        const int id = g.add_node(name.empty() ? std::to_string(n) : name);
        auto& node = g.node(id);

        for (const Run& run : d.trajectories[static_cast<std::size_t>(n)].runs) {
            node.appearance.add(run.span, PieceFunction<bool>::constant(true));
            const auto& pts = run.pts;

            if (run.is_instant()) {
                node.position.add(TimeInterval::instant(run.span.start),
                                  PieceFunction<Vec2>::constant(pts.front().p.planar()));
                continue;
            }

            // Raw time of point i; run bounds are taken from the span exactly.
            auto raw = [&](std::size_t i) {
                if (pts[i].p.t == pts.front().p.t) return run.span.start;
                if (pts[i].p.t == pts.back().p.t) return run.span.end;
                return pts[i].p.t / d.tau;
            };

            std::size_t i = 0;
            // Leading jump pair: the first member is the exact value at a
            // closed start bound.
            if (pts.size() >= 2 && pts[0].jump && pts[1].jump && pts[0].p.t == pts[1].p.t) {
                if (run.span.start_closed)
                    node.position.add(TimeInterval::instant(run.span.start),
                                      PieceFunction<Vec2>::constant(pts[0].p.planar()));
                i = 1;
            }

            const std::size_t last = pts.size() - 1;
            const bool trailing_pair = pts.size() >= 2 && pts[last - 1].jump &&
                                       pts[last].jump && pts[last - 1].p.t == pts[last].p.t;

            for (; i + 1 < pts.size(); ++i) {
                const ControlPoint& a = pts[i];
                const ControlPoint& b = pts[i + 1];
                if (a.p.t == b.p.t) continue;  // jump pair; neighbours carry the values

                // Pieces chain as (prev, t]: each owns its end instant, which
                // makes the first jump member the exact value at interior
                // discontinuities. The run's first piece owns a closed start;
                // a trailing jump pair at a closed end owns that instant
                // instead, so the segment before it ends open.
                TimeInterval span{raw(i), raw(i + 1), false, true};
                if (i == 0) span.start_closed = run.span.start_closed;
                if (trailing_pair && run.span.end_closed && i + 1 == last - 1)
                    span.end_closed = false;
                node.position.add(span,
                                  PieceFunction<Vec2>::linear(a.p.planar(), b.p.planar()));
            }

            // Trailing jump pair: the second member is the exact value at a
            // closed end bound.
            if (trailing_pair && run.span.end_closed) {
                node.position.add(TimeInterval::instant(run.span.end),
                                  PieceFunction<Vec2>::constant(pts[last].p.planar()));
            }
        }
    }
    g.time_domain = TimeInterval::all();
    return g;
}

}  // namespace stcube
