#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stcube/stcube.hpp"

namespace {

// Options shared by every command that reads a graph file.
void add_input_options(CLI::App* cmd, stcube::RunSpec& spec) {
    cmd->add_option("input", spec.input, "graph file (CSV)")->required();
    cmd->add_option("--kind", spec.input_kind,
                    "input format: discrete, events, or auto (default: by header)")
        ->check(CLI::IsMember({"auto", "discrete", "events"}));
    cmd->add_option("--window", spec.event_window,
                    "presence window for instant events (event logs only)");
    cmd->add_option("--slices", spec.slices,
                    "slice count when an event log must be sliced");
    cmd->add_option("--delta", spec.config.delta, "ideal edge length");
    cmd->add_option("--tau", spec.config.tau, "time-to-space conversion factor");
    cmd->add_option_function<std::string>(
           "--mode",
           [&spec](const std::string& v) {
               spec.config.mode = v == "discrete" ? stcube::LayoutMode::Discrete
                                                  : stcube::LayoutMode::Continuous;
           },
           "layout style: continuous (default) or discrete")
        ->check(CLI::IsMember({"continuous", "discrete"}));
}

void add_weight_options(CLI::App* cmd, stcube::RunSpec& spec) {
    cmd->add_option("--w-repulsion", spec.config.weights.repulsion, "repulsion weight");
    cmd->add_option("--w-attraction", spec.config.weights.attraction,
                    "edge attraction weight");
    cmd->add_option("--w-gravity", spec.config.weights.gravity, "gravity weight");
    cmd->add_option("--w-straighten", spec.config.weights.straightening,
                    "trajectory straightening weight");
    cmd->add_option("--w-mental-map", spec.config.weights.mental_map,
                    "movement damping weight");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"space-time cube layout of dynamic graphs"};
    app.require_subcommand(1);
    app.set_config("--config")
        ->envname("STCUBE_CONFIG")
        ->description("read default option values from this file");
    app.allow_config_extras(CLI::config_extras_mode::ignore_all);

    stcube::RunSpec spec;

    CLI::App* layout = app.add_subcommand("layout", "compute a drawing");
    add_input_options(layout, spec);
    add_weight_options(layout, spec);
    layout->add_option("-o,--out", spec.drawing, "drawing JSON to write")->required();
    layout->add_option("--iterations", spec.config.iterations, "iteration count");
    layout->add_option("--seed", spec.config.rng_seed, "random seed for initial placement");

    CLI::App* metrics = app.add_subcommand("metrics", "measure a drawing");
    add_input_options(metrics, spec);
    metrics->add_option("-d,--drawing", spec.drawing, "drawing JSON to measure")->required();
    metrics->add_option("-o,--out", spec.metrics_out, "metrics CSV path (default: stdout)");
    metrics->add_option("--stress-mode", spec.stress_mode,
                        "presence semantics in the stress columns: d or c")
        ->check(CLI::IsMember({"d", "c"}));
    metrics->add_option("--between", spec.between, "extra stress samples per slice gap");
    metrics->add_flag("!--no-scale-search", spec.scale_search,
                      "skip the scale search and measure at scale 1");
    metrics->add_option("--diameter", spec.node_diameter,
                        "node diameter for crowding, in post-scaling units");

    CLI::App* render = app.add_subcommand("render", "export SVG frames");
    add_input_options(render, spec);
    render->add_option("-d,--drawing", spec.drawing, "drawing JSON to render")->required();
    render->add_option("--frames-dir", spec.frames_dir, "output directory");
    render->add_option("--step", spec.frame_step, "time between frames")->required();
    render->add_option("--diameter", spec.node_diameter, "node diameter in drawing units");

    CLI::App* convert = app.add_subcommand("convert", "rewrite a graph file");
    add_input_options(convert, spec);
    convert->add_option("-o,--out", spec.convert_out, "output path")->required();
    convert->add_option("--to", spec.output_kind, "target format: discrete or events")
        ->required()
        ->check(CLI::IsMember({"discrete", "events"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    spec.command = app.get_subcommands().front()->get_name();
    return stcube::run_command(spec, std::cout, std::cerr);
}
