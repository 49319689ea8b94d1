#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stcube/graph.hpp"
#include "stcube/trajectory.hpp"

namespace stcube {

/// Serialize a drawing to JSON.  Keys are emitted in sorted order and
/// numbers in shortest round-trip form, so equal drawings produce
/// byte-identical text.  No timing or other run-dependent metadata is
/// stored.
inline std::string drawing_to_json(const SpaceTimeDrawing& d) {
    nlohmann::json root;
    root["format"] = "stcube-drawing";
    root["version"] = 1;
    root["delta"] = d.delta;
    root["tau"] = d.tau;

    nlohmann::json nodes = nlohmann::json::object();
    for (std::size_t n = 0; n < d.trajectories.size(); ++n) {
        nlohmann::json runs = nlohmann::json::array();
        for (const Run& run : d.trajectories[n].runs) {
            nlohmann::json jr;
            jr["span"] = {{"start", run.span.start},
                          {"end", run.span.end},
                          {"start_closed", run.span.start_closed},
                          {"end_closed", run.span.end_closed}};
            nlohmann::json points = nlohmann::json::array();
            nlohmann::json jumps = nlohmann::json::array();
            for (std::size_t i = 0; i < run.pts.size(); ++i) {
                const ControlPoint& cp = run.pts[i];
                points.push_back({cp.p.x, cp.p.y, cp.p.t});
                if (cp.jump) jumps.push_back(i);
            }
            jr["points"] = std::move(points);
            if (!jumps.empty()) jr["jumps"] = std::move(jumps);
            runs.push_back(std::move(jr));
        }
        nodes[d.node_names[n]] = std::move(runs);
    }
    root["nodes"] = std::move(nodes);
    return root.dump(2) + "\n";
}

inline void save_drawing(const SpaceTimeDrawing& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << drawing_to_json(d);
}

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& obj,
                                           const char* name,
                                           const std::string& where) {
    auto it = obj.find(name);
    if (it == obj.end())
        throw std::runtime_error(where + ": missing field: " + name);
    return *it;
}

}  // namespace detail

/// Parse a drawing from JSON text.  Reports missing or malformed fields by
/// name and rejects runs whose point times decrease.
inline SpaceTimeDrawing drawing_from_json(const std::string& text,
                                          const std::string& where = "drawing") {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(where + ": " + e.what());
    }

    try {
        if (detail::require_field(root, "format", where) != "stcube-drawing")
            throw std::runtime_error(where + ": not a drawing file");
        if (detail::require_field(root, "version", where).get<int>() != 1)
            throw std::runtime_error(where + ": unsupported version");

        SpaceTimeDrawing d;
        d.delta = detail::require_field(root, "delta", where).get<double>();
        d.tau = detail::require_field(root, "tau", where).get<double>();

        const nlohmann::json& nodes = detail::require_field(root, "nodes", where);
        for (auto it = nodes.begin(); it != nodes.end(); ++it) {
            Trajectory traj;
            traj.node = static_cast<int>(d.trajectories.size());
            for (const nlohmann::json& jr : it.value()) {
                const nlohmann::json& span = detail::require_field(jr, "span", where);
                Run run;
                run.span.start = detail::require_field(span, "start", where).get<double>();
                run.span.end = detail::require_field(span, "end", where).get<double>();
                run.span.start_closed =
                    detail::require_field(span, "start_closed", where).get<bool>();
                run.span.end_closed =
                    detail::require_field(span, "end_closed", where).get<bool>();
                for (const nlohmann::json& jp :
                     detail::require_field(jr, "points", where)) {
                    if (!jp.is_array() || jp.size() != 3)
                        throw std::runtime_error(where + ": point is not an [x,y,t] triple");
                    ControlPoint cp;
                    cp.p = {jp[0].get<double>(), jp[1].get<double>(), jp[2].get<double>()};
                    run.pts.push_back(cp);
                }
                if (run.pts.empty())
                    throw std::runtime_error(where + ": run without points");
                if (auto jj = jr.find("jumps"); jj != jr.end())
                    for (const nlohmann::json& idx : *jj) {
                        const std::size_t i = idx.get<std::size_t>();
                        if (i >= run.pts.size())
                            throw std::runtime_error(where + ": jump index out of range");
                        run.pts[i].jump = true;
                    }
                traj.runs.push_back(std::move(run));
            }
            d.node_names.push_back(it.key());
            d.trajectories.push_back(std::move(traj));
        }

        if (const auto error = check_monotone(d)) {
            throw std::runtime_error(where + ": time decreases for node '" +
                                     d.node_names[static_cast<std::size_t>(error->node)] +
                                     "' in run " + std::to_string(error->run));
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(where + ": " + e.what());
    }
}

inline SpaceTimeDrawing load_drawing(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return drawing_from_json(text, path);
}

/// Reorder a drawing's trajectories to the node-id order of `g`, matching
/// by name.  Needed when a drawing loaded from a file is paired with a
/// graph whose nodes were numbered differently.
inline SpaceTimeDrawing align_drawing(const SpaceTimeDrawing& d,
                                      const ContinuousDynamicGraph& g) {
    if (d.node_names.size() != g.nodes().size())
        throw std::runtime_error("drawing and graph disagree on node count");
    SpaceTimeDrawing out;
    out.delta = d.delta;
    out.tau = d.tau;
    out.node_names.resize(g.nodes().size());
    out.trajectories.resize(g.nodes().size());
    for (std::size_t i = 0; i < d.node_names.size(); ++i) {
        const int id = g.node_id(d.node_names[i]);
        if (id < 0)
            throw std::runtime_error("drawing names unknown node '" + d.node_names[i] + "'");
        out.node_names[static_cast<std::size_t>(id)] = d.node_names[i];
        out.trajectories[static_cast<std::size_t>(id)] = d.trajectories[i];
        out.trajectories[static_cast<std::size_t>(id)].node = id;
    }
    return out;
}

}  // namespace stcube
