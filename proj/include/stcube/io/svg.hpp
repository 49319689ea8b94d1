#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stcube/graph.hpp"
#include "stcube/trajectory.hpp"

namespace stcube {

struct SvgStyle {
    int width = 800;
    int height = 600;
    double margin = 0.05;        // fraction of the viewport kept clear
    double node_diameter = 0.2;  // in drawing units
    bool labels = true;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

/// Fixed world-to-pixel mapping derived from the whole drawing, so every
/// frame of a sequence shares one coordinate system.
struct SvgMapping {
    double scale = 1.0;
    double x0 = 0.0, y1 = 0.0;  // world-x at left edge, world-y at top edge
    double pad_x = 0.0, pad_y = 0.0;

    static SvgMapping of(const SpaceTimeDrawing& d, const SvgStyle& style) {
        double lo_x = 0.0, hi_x = 1.0, lo_y = 0.0, hi_y = 1.0;
        bool seen = false;
        for (const Trajectory& traj : d.trajectories)
            for (const Run& run : traj.runs)
                for (const ControlPoint& cp : run.pts) {
                    if (!seen) {
                        lo_x = hi_x = cp.p.x;
                        lo_y = hi_y = cp.p.y;
                        seen = true;
                    }
                    lo_x = std::min(lo_x, cp.p.x);
                    hi_x = std::max(hi_x, cp.p.x);
                    lo_y = std::min(lo_y, cp.p.y);
                    hi_y = std::max(hi_y, cp.p.y);
                }
        const double r = style.node_diameter / 2.0;
        lo_x -= r, hi_x += r, lo_y -= r, hi_y += r;

        SvgMapping m;
        const double usable_w = style.width * (1.0 - 2.0 * style.margin);
        const double usable_h = style.height * (1.0 - 2.0 * style.margin);
        const double span_x = std::max(hi_x - lo_x, 1e-9);
        const double span_y = std::max(hi_y - lo_y, 1e-9);
        m.scale = std::min(usable_w / span_x, usable_h / span_y);
        m.x0 = lo_x;
        m.y1 = hi_y;
        m.pad_x = (style.width - span_x * m.scale) / 2.0;
        m.pad_y = (style.height - span_y * m.scale) / 2.0;
        return m;
    }

    double px(double x) const { return pad_x + (x - x0) * scale; }
    double py(double y) const { return pad_y + (y1 - y) * scale; }  // y flips
};

}  // namespace detail

/// Render the drawing at time `t` as one SVG image: an edge line for each
/// edge present at `t` with both endpoints placed, a circle per present
/// node, and optional labels.  Pass the graph the drawing was computed
/// from; without it only nodes are drawn.
inline std::string render_frame(const SpaceTimeDrawing& d,
                                const ContinuousDynamicGraph* g,
                                double t,
                                const SvgStyle& style = {}) {
    if (g != nullptr && !g->time_domain.contains(t) && !g->time_domain.sample_contains(t))
        throw std::out_of_range("render_frame: time outside the graph's domain");
    const detail::SvgMapping m = detail::SvgMapping::of(d, style);
    const double radius = std::max(style.node_diameter / 2.0 * m.scale, 1.0);

    std::vector<std::optional<Vec2>> at;
    at.reserve(d.trajectories.size());
    for (std::size_t n = 0; n < d.trajectories.size(); ++n)
        at.push_back(d.position_at(static_cast<int>(n), t));

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(style.width) + "\" height=\"" + std::to_string(style.height) +
           "\" viewBox=\"0 0 " + std::to_string(style.width) + " " +
           std::to_string(style.height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (g != nullptr) {
        for (const ContinuousDynamicGraph::Edge& e : g->edges()) {
            if (!e.appearance.sample(t)) continue;
            const auto& pu = at[static_cast<std::size_t>(e.u)];
            const auto& pv = at[static_cast<std::size_t>(e.v)];
            if (!pu || !pv) continue;
            out += "<line x1=\"" + detail::fmt(m.px(pu->x)) + "\" y1=\"" +
                   detail::fmt(m.py(pu->y)) + "\" x2=\"" + detail::fmt(m.px(pv->x)) +
                   "\" y2=\"" + detail::fmt(m.py(pv->y)) +
                   "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
        }
    }

    for (std::size_t n = 0; n < d.trajectories.size(); ++n) {
        if (!at[n]) continue;
        const double cx = m.px(at[n]->x), cy = m.py(at[n]->y);
        out += "<circle cx=\"" + detail::fmt(cx) + "\" cy=\"" + detail::fmt(cy) +
               "\" r=\"" + detail::fmt(radius) +
               "\" fill=\"#1f77b4\" stroke=\"#123\" stroke-width=\"0.7\"/>\n";
        if (style.labels) {
            std::string text = d.node_names[n];
            if (g != nullptr) {
                const int id = g->node_id(d.node_names[n]);
                if (id >= 0) {
                    const std::string label = g->node(id).label.sample(t);
                    if (!label.empty()) text = label;
                }
            }
            out += "<text x=\"" + detail::fmt(cx + radius + 2.0) + "\" y=\"" +
                   detail::fmt(cy + 4.0) + "\" font-size=\"11\" font-family=\"sans-serif\">" +
                   text + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

inline void save_frame(const std::string& svg, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << svg;
}

/// File name for frame `index` in a rendered sequence: frame_000000.svg,
/// frame_000001.svg, ...
inline std::string frame_name(int index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "frame_%06d.svg", index);
    return buf;
}

}  // namespace stcube
