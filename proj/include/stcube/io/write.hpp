#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stcube/graph.hpp"
#include "stcube/io/discrete.hpp"

namespace stcube {

namespace detail {

inline std::string number_text(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace detail

/// Write a sliced graph as `slice,source,target` CSV.  Nodes that are
/// present on a slice but have no edge there get a node-only row with an
/// empty target, so isolated presence survives a round trip.
inline void save_discrete(const SlicedInput& input, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "slice,source,target\n";

    const ContinuousDynamicGraph& g = input.graph;
    for (const double t : input.slice_times) {
        std::vector<std::pair<std::string, std::string>> edges;
        std::vector<bool> covered(g.nodes().size(), false);
        for (const ContinuousDynamicGraph::Edge& e : g.edges()) {
            // Exact lookup: presence that ends at the final slice time is
            // closed there and must still be written.
            if (!e.appearance.value(t)) continue;
            auto names = std::minmax(g.node(e.u).name, g.node(e.v).name);
            edges.push_back({names.first, names.second});
            covered[static_cast<std::size_t>(e.u)] = true;
            covered[static_cast<std::size_t>(e.v)] = true;
        }
        std::sort(edges.begin(), edges.end());

        std::vector<std::string> lonely;
        for (std::size_t n = 0; n < g.nodes().size(); ++n) {
            const auto& node = g.nodes()[n];
            if (!covered[n] && node.appearance.value(t)) lonely.push_back(node.name);
        }
        std::sort(lonely.begin(), lonely.end());

        const std::string st = detail::number_text(t);
        for (const auto& [a, b] : edges) out << st << ',' << a << ',' << b << '\n';
        for (const std::string& name : lonely) out << st << ',' << name << ",\n";
    }
}

/// Write a graph as `time,source,target,duration` CSV, one row per merged
/// edge-presence interval.  Zero-length intervals are written with
/// duration 0 and will be widened by the reader's window; labels are not
/// written.
inline void save_events(const ContinuousDynamicGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "time,source,target,duration\n";

    struct Row {
        double time;
        std::string source, target;
        double duration;
    };
    std::vector<Row> rows;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        auto names = std::minmax(g.node(edge.u).name, g.node(edge.v).name);
        for (const TimeInterval& span : edge_appearance_intervals(g, e))
            rows.push_back({span.start, names.first, names.second, span.length()});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.time != b.time) return a.time < b.time;
        if (a.source != b.source) return a.source < b.source;
        return a.target < b.target;
    });
    for (const Row& r : rows)
        out << detail::number_text(r.time) << ',' << r.source << ',' << r.target << ','
            << detail::number_text(r.duration) << '\n';
}

}  // namespace stcube
