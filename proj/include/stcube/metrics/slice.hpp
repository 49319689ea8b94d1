#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "../geometry.hpp"
#include "../graph.hpp"
#include "../trajectory.hpp"

namespace stcube {

/// Which element set a metric slice uses: the precise appearances at the
/// query time (continuous), or the node/edge set of the nearest slice time
/// (discrete) while positions are still read at the query time.
enum class Presence { Continuous, Discrete };

/// A static graph cut out of the space-time cube at one moment.
struct SliceGraph {
    double time = 0.0;
    std::vector<int> node_ids;                    // present nodes, ascending id
    std::vector<Vec2> positions;                  // parallel to node_ids
    std::vector<std::pair<int, int>> edges;       // indices into node_ids
    std::vector<std::vector<double>> distances;   // hops * delta; inf when disconnected

    int count() const { return static_cast<int>(node_ids.size()); }
};

/// Nearest slice time to t; an exact midpoint resolves to the later slice.
inline double nearest_slice_time(const std::vector<double>& slice_times, double t) {
    if (slice_times.empty()) return t;
    auto it = std::lower_bound(slice_times.begin(), slice_times.end(), t);
    if (it == slice_times.begin()) return *it;
    if (it == slice_times.end()) return slice_times.back();
    const double after = *it;
    const double before = *(it - 1);
    return (t - before < after - t) ? before : after;
}

/// Drawn position at raw time t; when the node is absent there, the position
/// at its nearest run boundary (later run wins a tie). Nothing only if the
/// node has no trajectory at all.
inline std::optional<Vec2> position_at_clamped(const SpaceTimeDrawing& d, int node,
                                               double raw_t) {
    if (auto p = d.position_at(node, raw_t)) return p;
    const auto& runs = d.trajectories[static_cast<std::size_t>(node)].runs;
    const Run* best = nullptr;
    double best_gap = std::numeric_limits<double>::infinity();
    bool best_after = false;
    for (const Run& r : runs) {
        if (r.pts.empty()) continue;
        double gap;
        bool after;
        if (raw_t < r.span.start) {
            gap = r.span.start - raw_t;
            after = true;
        } else if (raw_t > r.span.end) {
            gap = raw_t - r.span.end;
            after = false;
        } else {
            // Inside the span but unsampled (e.g. the closed end of a run):
            // clamp to whichever bound is nearer.
            gap = 0.0;
            after = raw_t - r.span.start < r.span.end - raw_t;
        }
        if (gap < best_gap || (gap == best_gap && after && !best_after)) {
            best_gap = gap;
            best = &r;
            best_after = after;
        }
    }
    if (!best) return std::nullopt;
    return best_after ? best->pts.front().p.planar() : best->pts.back().p.planar();
}

/// Cut the drawing at time t. Presence::Discrete takes the node/edge set of
/// the nearest slice time; positions always come from the trajectories at t.
/// Presence is the graph's exact appearance value at the chosen time, so a
/// node on the closed end of its interval still counts.
/// Graph-theoretic distances are breadth-first hops times delta, per slice.
inline SliceGraph slice(const SpaceTimeDrawing& d, const ContinuousDynamicGraph& g, double t,
                        Presence mode, const std::vector<double>& slice_times = {}) {
    if (!g.time_domain.contains(t) && !g.time_domain.sample_contains(t))
        throw std::out_of_range("slice: time outside the graph's domain");

    SliceGraph s;
    s.time = t;
    const double tp = mode == Presence::Discrete ? nearest_slice_time(slice_times, t) : t;

    std::vector<int> local(static_cast<std::size_t>(g.node_count()), -1);
    for (int n = 0; n < g.node_count(); ++n) {
        if (!g.node(n).appearance.value(tp)) continue;
        const auto pos = position_at_clamped(d, n, t);
        if (!pos) continue;
        local[static_cast<std::size_t>(n)] = s.count();
        s.node_ids.push_back(n);
        s.positions.push_back(*pos);
    }

    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        if (!g.edge(e).appearance.value(tp)) continue;
        const int lu = local[static_cast<std::size_t>(edge.u)];
        const int lv = local[static_cast<std::size_t>(edge.v)];
        if (lu < 0 || lv < 0) continue;
        s.edges.emplace_back(lu, lv);
    }

    // All-pairs shortest paths over the slice's edge set.
    const int m = s.count();
    const double inf = std::numeric_limits<double>::infinity();
    s.distances.assign(static_cast<std::size_t>(m),
                       std::vector<double>(static_cast<std::size_t>(m), inf));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (const auto& [u, v] : s.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (int src = 0; src < m; ++src) {
        auto& row = s.distances[static_cast<std::size_t>(src)];
        row[static_cast<std::size_t>(src)] = 0.0;
        std::queue<int> frontier;
        frontier.push(src);
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (row[static_cast<std::size_t>(v)] != inf) continue;
                row[static_cast<std::size_t>(v)] = row[static_cast<std::size_t>(u)] + d.delta;
                frontier.push(v);
            }
        }
    }
    return s;
}

}  // namespace stcube
