#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stcube/graph.hpp"
#include "stcube/io/csv.hpp"
#include "stcube/io/discrete.hpp"
#include "stcube/io/drawing_json.hpp"
#include "stcube/io/events.hpp"
#include "stcube/io/svg.hpp"
#include "stcube/io/write.hpp"
#include "stcube/layout/engine.hpp"
#include "stcube/metrics/report.hpp"

namespace stcube {

/// Bad arguments or unreadable/malformed input: exit code 2.  Anything
/// else that throws is an internal error: exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything one command invocation needs, assembled by the front end
/// (or directly by tests).
struct RunSpec {
    std::string command;            // layout | metrics | render | convert
    std::string input;              // graph file (CSV)
    std::string input_kind = "auto";  // discrete | events | auto (by header)
    std::string drawing;            // drawing JSON: output of layout, input elsewhere
    std::string metrics_out;        // metrics CSV path; empty → stdout
    std::string frames_dir = ".";
    std::string convert_out;
    std::string output_kind;        // convert target: discrete | events
    std::string graph_name;         // label in the metrics row; default: input stem

    LayoutConfig config;            // delta, tau, iterations, seed, weights, mode
    double event_window = 1.0;      // presence window for instant events
    int slices = 8;                 // slice count when an event log must be sliced
    double frame_step = 0.0;        // render: time between frames
    std::string stress_mode = "d";  // presence semantics in the stress columns
    int between = 1;                // off-slice sample points per gap
    bool scale_search = true;       // off → all metrics at scale 1
    double node_diameter = 0.2;     // in post-scaling units
};

namespace detail {

inline std::string input_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

inline std::string resolve_kind(const RunSpec& spec) {
    if (spec.input_kind == "discrete" || spec.input_kind == "events")
        return spec.input_kind;
    if (spec.input_kind != "auto")
        throw UsageError("unknown input kind: " + spec.input_kind);
    const std::vector<CsvRow> rows = read_csv(spec.input);
    if (!rows.empty() && !rows.front().fields.empty()) {
        const std::string& head = rows.front().fields[0];
        if (head == "slice") return "discrete";
        if (head == "time") return "events";
    }
    throw UsageError(spec.input + ": cannot tell discrete from events input; "
                     "add a header row or pass --kind");
}

inline void require_file(const std::string& path) {
    if (path.empty()) throw UsageError("no input file given");
    if (!std::filesystem::exists(path))
        throw UsageError("missing input: " + path);
}

/// The graph/slice pairing every command agrees on.  A discrete file is
/// used as-is with its own slice times.  An event log is used directly in
/// continuous mode; in discrete mode it is resampled at `slices` evenly
/// spaced times, and those times also serve as the metric slices.
struct PreparedInput {
    ContinuousDynamicGraph graph;
    std::vector<double> slice_times;
};

inline PreparedInput prepare_input(const RunSpec& spec) {
    require_file(spec.input);
    PreparedInput out;
    try {
        const std::string kind = resolve_kind(spec);
        if (kind == "discrete") {
            SlicedInput in = load_discrete(spec.input);
            out.graph = std::move(in.graph);
            out.slice_times = std::move(in.slice_times);
        } else {
            const ContinuousDynamicGraph continuous =
                load_events(spec.input, spec.event_window);
            SlicedInput sliced = discretize(continuous, spec.slices);
            if (spec.config.mode == LayoutMode::Discrete) {
                out.graph = std::move(sliced.graph);
            } else {
                out.graph = continuous;
            }
            out.slice_times = std::move(sliced.slice_times);
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return out;
}

inline SpaceTimeDrawing load_aligned_drawing(const RunSpec& spec,
                                             const ContinuousDynamicGraph& g) {
    require_file(spec.drawing);
    try {
        return align_drawing(load_drawing(spec.drawing), g);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

inline std::string csv_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace detail

inline int run_layout(const RunSpec& spec, std::ostream& out) {
    if (spec.drawing.empty()) throw UsageError("layout needs an output drawing path");
    detail::PreparedInput in = detail::prepare_input(spec);

    const auto started = std::chrono::steady_clock::now();
    const SpaceTimeDrawing drawing = layout(in.graph, spec.config, in.slice_times);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    save_drawing(drawing, spec.drawing);
    out << "drawing=" << spec.drawing << " seed=" << spec.config.rng_seed
        << " iterations=" << spec.config.iterations
        << " mode=" << (spec.config.mode == LayoutMode::Discrete ? "d" : "c")
        << " layout_seconds=" << detail::csv_number(seconds) << "\n";
    return 0;
}

inline int run_metrics(const RunSpec& spec, std::ostream& out) {
    if (spec.stress_mode != "d" && spec.stress_mode != "c")
        throw UsageError("stress mode must be d or c");
    detail::PreparedInput in = detail::prepare_input(spec);
    const SpaceTimeDrawing drawing = detail::load_aligned_drawing(spec, in.graph);

    MetricsReport report;
    if (spec.scale_search) {
        report = full_report(drawing, in.graph, in.slice_times, spec.between,
                             std::numeric_limits<double>::quiet_NaN(),
                             spec.node_diameter);
    } else {
        const auto started = std::chrono::steady_clock::now();
        report.scale = 1.0;
        report.scale_exponent = 0;
        report.scale_interior = true;
        auto d_pair = stress_aggregates(drawing, in.graph, in.slice_times,
                                        Presence::Discrete, 1.0, spec.between);
        auto c_pair = stress_aggregates(drawing, in.graph, in.slice_times,
                                        Presence::Continuous, 1.0, spec.between);
        report.stress_on_d = d_pair.first;
        report.stress_off_d = d_pair.second;
        report.stress_on_c = c_pair.first;
        report.stress_off_c = c_pair.second;
        report.movement = movement(drawing, 1.0);
        report.crowding = crowding(drawing, spec.node_diameter);
        report.runtime_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                .count();
    }

    const bool use_d = spec.stress_mode == "d";
    const std::string name =
        spec.graph_name.empty() ? detail::input_stem(spec.input) : spec.graph_name;
    std::string text = "graph,type,time_s,scale,stress_on,stress_off,movement,crowding,scale_at\n";
    text += name;
    text += ",";
    text += spec.config.mode == LayoutMode::Discrete ? "d" : "c";
    text += ",";
    text += detail::csv_number(report.runtime_seconds);
    text += ",";
    text += detail::csv_number(report.scale);
    text += ",";
    text += detail::csv_number(use_d ? report.stress_on_d : report.stress_on_c);
    text += ",";
    text += detail::csv_number(use_d ? report.stress_off_d : report.stress_off_c);
    text += ",";
    text += detail::csv_number(report.movement);
    text += ",";
    text += std::to_string(report.crowding);
    text += ",";
    text += !spec.scale_search ? "fixed" : report.scale_interior ? "interior" : "boundary";
    text += "\n";

    if (spec.metrics_out.empty()) {
        out << text;
    } else {
        std::ofstream file(spec.metrics_out, std::ios::binary);
        if (!file) throw UsageError("cannot write file: " + spec.metrics_out);
        file << text;
    }
    return 0;
}

inline int run_render(const RunSpec& spec, std::ostream& out) {
    if (!(spec.frame_step > 0.0)) throw UsageError("render needs a positive --step");
    detail::PreparedInput in = detail::prepare_input(spec);
    const SpaceTimeDrawing drawing = detail::load_aligned_drawing(spec, in.graph);
    std::filesystem::create_directories(spec.frames_dir);

    // One frame per step across the drawing's own time extent; an empty
    // extent produces no frames.
    double lo = 0.0, hi = 0.0;
    bool seen = false;
    for (const Trajectory& traj : drawing.trajectories)
        for (const Run& run : traj.runs) {
            if (!seen) {
                lo = run.span.start;
                hi = run.span.end;
                seen = true;
            }
            lo = std::min(lo, run.span.start);
            hi = std::max(hi, run.span.end);
        }

    SvgStyle style;
    style.node_diameter = spec.node_diameter;
    int count = 0;
    if (seen && lo < hi) {
        // ceil(extent / step) frames: lo, lo+step, ... while still below hi.
        for (int k = 0; lo + k * spec.frame_step < hi; ++k) {
            save_frame(render_frame(drawing, &in.graph, lo + k * spec.frame_step, style),
                       (std::filesystem::path(spec.frames_dir) / frame_name(k)).string());
            ++count;
        }
    }
    out << "frames=" << count << " dir=" << spec.frames_dir << "\n";
    return 0;
}

inline int run_convert(const RunSpec& spec, std::ostream& out) {
    if (spec.convert_out.empty()) throw UsageError("convert needs an output path");
    if (spec.output_kind != "discrete" && spec.output_kind != "events")
        throw UsageError("convert target must be discrete or events");
    detail::require_file(spec.input);
    try {
        const std::string kind = detail::resolve_kind(spec);
        if (spec.output_kind == "discrete") {
            SlicedInput sliced;
            if (kind == "discrete") {
                sliced = load_discrete(spec.input);
            } else {
                sliced = discretize(load_events(spec.input, spec.event_window),
                                    spec.slices);
            }
            save_discrete(sliced, spec.convert_out);
        } else {
            const ContinuousDynamicGraph g =
                kind == "discrete" ? load_discrete(spec.input).graph
                                   : load_events(spec.input, spec.event_window);
            save_events(g, spec.convert_out);
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    out << "wrote " << spec.convert_out << "\n";
    return 0;
}

/// Execute a command, mapping failures to the documented exit codes:
/// 0 success, 1 internal error, 2 usage or input error.
inline int run_command(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        if (spec.command == "layout") return run_layout(spec, out);
        if (spec.command == "metrics") return run_metrics(spec, out);
        if (spec.command == "render") return run_render(spec, out);
        if (spec.command == "convert") return run_convert(spec, out);
        throw UsageError("unknown command: " + spec.command);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace stcube
