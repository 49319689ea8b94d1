#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stcube/graph.hpp"
#include "stcube/io/csv.hpp"
#include "stcube/time_interval.hpp"

namespace stcube {

/// A dynamic graph together with the slice times it was sampled at.
struct SlicedInput {
    ContinuousDynamicGraph graph;
    std::vector<double> slice_times;
};

namespace detail {

/// Presence window of slice i: half the gap to each neighbouring slice,
/// clipped to the data domain [first slice, last slice].  Windows of
/// consecutive slices touch at the midpoints, so an element present in
/// both gets one merged interval.
inline TimeInterval slice_window(const std::vector<double>& times, std::size_t i) {
    const double t = times[i];
    double lo = t, hi = t;
    if (i > 0) lo = t - (t - times[i - 1]) / 2.0;
    if (i + 1 < times.size()) hi = t + (times[i + 1] - t) / 2.0;
    return TimeInterval::closed(lo, hi);
}

inline void add_true_pieces(PiecewiseAttribute<bool>& attr, const IntervalSet& set) {
    for (const TimeInterval& span : set.items())
        attr.add(span, PieceFunction<bool>::constant(true));
}

}  // namespace detail

/// Load a timesliced graph from a CSV file with rows `slice,source,target`.
/// The slice column holds the slice time.  A row with an empty target
/// declares a node present on that slice without adding an edge; edge rows
/// imply presence of both endpoints.  Each slice covers half the gap to its
/// neighbours, so presence on consecutive slices merges into one interval.
inline SlicedInput load_discrete(const std::string& path) {
    const std::vector<CsvRow> rows = read_csv(path);
    if (rows.empty()) throw std::runtime_error(path + ": no data rows");

    struct Mention {
        double time;
        std::string source, target;  // target empty for node-only rows
    };
    std::vector<Mention> mentions;
    std::set<double> time_set;

    bool first = true;
    for (const CsvRow& row : rows) {
        if (first) {
            first = false;
            // Allow an optional header row.
            if (!row.fields.empty() && row.fields[0] == "slice") continue;
        }
        if (row.fields.size() < 2 || row.fields.size() > 3)
            throw std::runtime_error(path + ":" + std::to_string(row.line) +
                                     ": expected slice,source[,target]");
        Mention m;
        m.time = parse_number(row.fields[0], path, row.line);
        m.source = row.fields[1];
        m.target = row.fields.size() == 3 ? row.fields[2] : "";
        if (m.source.empty())
            throw std::runtime_error(path + ":" + std::to_string(row.line) +
                                     ": empty source name");
        if (m.target == m.source)
            throw std::runtime_error(path + ":" + std::to_string(row.line) +
                                     ": self loop on '" + m.source + "'");
        time_set.insert(m.time);
        mentions.push_back(std::move(m));
    }
    if (mentions.empty()) throw std::runtime_error(path + ": no data rows");

    SlicedInput out;
    out.slice_times.assign(time_set.begin(), time_set.end());

    std::map<double, std::size_t> slice_of;
    for (std::size_t i = 0; i < out.slice_times.size(); ++i)
        slice_of[out.slice_times[i]] = i;

    std::map<std::string, IntervalSet> node_presence;
    std::map<std::pair<std::string, std::string>, IntervalSet> edge_presence;

    for (const Mention& m : mentions) {
        const TimeInterval window =
            detail::slice_window(out.slice_times, slice_of.at(m.time));
        node_presence[m.source].add(window);
        if (m.target.empty()) continue;
        node_presence[m.target].add(window);
        auto key = std::minmax(m.source, m.target);
        edge_presence[{key.first, key.second}].add(window);
    }

    ContinuousDynamicGraph& g = out.graph;
    g.time_domain = TimeInterval::closed(out.slice_times.front(), out.slice_times.back());
    for (const auto& [name, set] : node_presence) {
        const int id = g.add_node(name);
        detail::add_true_pieces(g.node(id).appearance, set);
    }
    for (const auto& [names, set] : edge_presence) {
        const int id = g.add_edge(g.node_id(names.first), g.node_id(names.second));
        detail::add_true_pieces(g.edge(id).appearance, set);
    }
    return out;
}

/// Sample a continuous-time graph at `count` evenly spaced slices, producing
/// the timesliced approximation used for side-by-side comparisons.  An
/// element is present on a slice when its presence overlaps the slice's
/// half-gap window, and its new presence is the union of the windows of the
/// slices that cover it.
inline SlicedInput discretize(const ContinuousDynamicGraph& g, int count) {
    if (count < 2) throw std::invalid_argument("discretize: need at least 2 slices");
    if (!g.time_domain.valid() || !(g.time_domain.end > g.time_domain.start))
        throw std::invalid_argument("discretize: graph needs a bounded time domain");

    SlicedInput out;
    const double a = g.time_domain.start, b = g.time_domain.end;
    for (int i = 0; i < count; ++i)
        out.slice_times.push_back(a + (b - a) * i / (count - 1));

    std::vector<TimeInterval> windows;
    for (std::size_t i = 0; i < out.slice_times.size(); ++i)
        windows.push_back(detail::slice_window(out.slice_times, i));

    auto resample = [&](const IntervalSet& original) {
        IntervalSet sampled;
        for (const TimeInterval& w : windows)
            if (!original.intersected(w).empty()) sampled.add(w);
        return sampled;
    };

    ContinuousDynamicGraph& d = out.graph;
    d.time_domain = g.time_domain;
    for (int n = 0; n < g.node_count(); ++n) {
        IntervalSet presence;
        for (const TimeInterval& span : appearance_intervals(g, n)) presence.add(span);
        const int id = d.add_node(g.node(n).name);
        detail::add_true_pieces(d.node(id).appearance, resample(presence));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        IntervalSet presence;
        for (const TimeInterval& span : edge_appearance_intervals(g, e))
            presence.add(span);
        const IntervalSet sampled = resample(presence);
        if (sampled.empty()) continue;
        const int id = d.add_edge(d.node_id(g.node(g.edge(e).u).name),
                                  d.node_id(g.node(g.edge(e).v).name));
        detail::add_true_pieces(d.edge(id).appearance, sampled);
    }
    return out;
}

}  // namespace stcube
