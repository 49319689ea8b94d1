#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stcube/graph.hpp"
#include "stcube/io/csv.hpp"
#include "stcube/io/discrete.hpp"
#include "stcube/time_interval.hpp"

namespace stcube {

/// Load an event log from a CSV file with rows
/// `time,source,target[,duration][,label]`.
///
/// An event with a positive duration is present on [time, time+duration].
/// An instant event (no duration, or zero) is widened to an interval of
/// total length `window` centered on the event time.  Nodes are created on
/// first mention and are present over the union of their incident event
/// intervals, so the result always passes coverage validation.  The last
/// column, when present and non-numeric, becomes the source node's label
/// over the event interval.
inline ContinuousDynamicGraph load_events(const std::string& path, double window = 1.0) {
    if (!(window > 0.0)) throw std::invalid_argument("load_events: window must be positive");

    const std::vector<CsvRow> rows = read_csv(path);

    struct Event {
        TimeInterval span;
        std::string source, target, label;
    };
    std::vector<Event> events;

    bool first = true;
    for (const CsvRow& row : rows) {
        if (first) {
            first = false;
            if (!row.fields.empty() && row.fields[0] == "time") continue;
        }
        if (row.fields.size() < 3 || row.fields.size() > 5)
            throw std::runtime_error(path + ":" + std::to_string(row.line) +
                                     ": expected time,source,target[,duration][,label]");
        Event e;
        const double t = parse_number(row.fields[0], path, row.line);
        e.source = row.fields[1];
        e.target = row.fields[2];
        if (e.source.empty() || e.target.empty())
            throw std::runtime_error(path + ":" + std::to_string(row.line) +
                                     ": empty node name");
        if (e.source == e.target)
            throw std::runtime_error(path + ":" + std::to_string(row.line) +
                                     ": self loop on '" + e.source + "'");

        double duration = 0.0;
        std::size_t next = 3;
        if (row.fields.size() > next) {
            // The fourth column is a duration when numeric or an empty
            // placeholder, a label otherwise.
            if (row.fields[next].empty()) {
                ++next;
            } else {
                try {
                    std::size_t used = 0;
                    duration = std::stod(row.fields[next], &used);
                    if (used == row.fields[next].size()) {
                        ++next;
                    } else {
                        duration = 0.0;
                    }
                } catch (const std::exception&) {
                    duration = 0.0;
                }
            }
        }
        if (duration < 0.0)
            throw std::runtime_error(path + ":" + std::to_string(row.line) +
                                     ": negative duration");
        if (row.fields.size() > next) e.label = row.fields[next];

        e.span = duration > 0.0
                     ? TimeInterval::closed(t, t + duration)
                     : TimeInterval::closed(t - window / 2.0, t + window / 2.0);
        events.push_back(std::move(e));
    }
    if (events.empty()) return {};

    std::map<std::string, IntervalSet> node_presence;
    std::map<std::pair<std::string, std::string>, IntervalSet> edge_presence;
    std::map<std::string, std::vector<std::pair<TimeInterval, std::string>>> labels;
    std::vector<std::string> node_order;

    double lo = events.front().span.start, hi = events.front().span.end;
    for (const Event& e : events) {
        lo = std::min(lo, e.span.start);
        hi = std::max(hi, e.span.end);
        for (const std::string& name : {e.source, e.target}) {
            if (!node_presence.count(name)) node_order.push_back(name);
            node_presence[name].add(e.span);
        }
        auto key = std::minmax(e.source, e.target);
        edge_presence[{key.first, key.second}].add(e.span);
        if (!e.label.empty()) labels[e.source].push_back({e.span, e.label});
    }

    ContinuousDynamicGraph g;
    g.time_domain = TimeInterval::closed(lo, hi);
    for (const std::string& name : node_order) {
        const int id = g.add_node(name);
        auto& node = g.node(id);
        detail::add_true_pieces(node.appearance, node_presence.at(name));
        if (auto it = labels.find(name); it != labels.end()) {
            // Spans of consecutive labelled events may overlap; clip each
            // label to the part not already claimed by an earlier one.
            IntervalSet claimed;
            for (const auto& [span, text] : it->second) {
                IntervalSet fresh(span);
                for (const TimeInterval& held : claimed.items()) fresh.subtract(held);
                for (const TimeInterval& piece : fresh.items())
                    node.label.add(piece, PieceFunction<std::string>::constant(text));
                claimed.add(span);
            }
        }
    }
    for (const auto& [names, set] : edge_presence) {
        const int id = g.add_edge(g.node_id(names.first), g.node_id(names.second));
        detail::add_true_pieces(g.edge(id).appearance, set);
    }
    return g;
}

}  // namespace stcube
