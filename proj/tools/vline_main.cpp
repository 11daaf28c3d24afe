// vline: generate phantoms, compute V-line / star transform data, run the
// reconstruction pipelines, and aggregate run reports.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vline/errors.hpp"
#include "vline/eval.hpp"
#include "vline/runner.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

void add_geometry_options(CLI::App* cmd, vline::RunConfig& cfg) {
    cmd->add_option("--u-angle", cfg.u_angle_deg, "Direction u, degrees (default 45)");
    cmd->add_option("--v-angle", cfg.v_angle_deg, "Direction v, degrees (default 135)");
    cmd->add_option("--star-angles", cfg.star_angles_deg,
                    "Star branch angles, degrees (default 0 120 240)");
    cmd->add_option("--star-weights", cfg.star_weights, "Star branch weights (default 1 1 1)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized V-line transforms on 2D vector fields"};
    app.require_subcommand(1);

    vline::RunConfig cfg;
    std::vector<std::string> report_paths;

    CLI::App* phantom = app.add_subcommand("phantom", "Write a phantom vector field");
    phantom->add_option("--id", cfg.phantom_id, "Phantom id (1..3)")->required();
    phantom->add_option("--n", cfg.n, "Pixels per side");
    phantom->add_option("--half-extent", cfg.half_extent, "Domain half width");
    phantom->add_option("--out", cfg.out_dir, "Output directory")->required();

    CLI::App* forward = app.add_subcommand("forward", "Compute forward transform data");
    forward->add_option("--transform", cfg.transform, "lvt | tvt | lvt1 | tvt1 | star")
        ->required();
    forward->add_option("--in", cfg.input_path, "Input field file (.vlf)")->required();
    forward->add_flag("--exact-moment", cfg.exact_moment,
                      "Exact per-segment moment weights instead of pixel-center distances");
    add_geometry_options(forward, cfg);
    forward->add_option("--out", cfg.out_dir, "Output directory")->required();

    CLI::App* pipeline = app.add_subcommand("pipeline", "Run a reconstruction pipeline");
    pipeline->add_option("--id", cfg.pipeline_id, "Pipeline id (1..5)")->required();
    pipeline->add_option("--phantom", cfg.phantom_id, "Phantom id (1..3)");
    pipeline->add_option("--image", cfg.image_path, "Square RGB image input");
    pipeline->add_option("--in", cfg.input_path, "Vector field file input");
    pipeline->add_option("--n", cfg.n, "Pixels per side (phantom inputs)");
    pipeline->add_option("--half-extent", cfg.half_extent, "Domain half width");
    pipeline->add_option("--field", cfg.special_field,
                         "Pipeline 1 input: solenoidal | potential");
    pipeline->add_option("--noise", cfg.noise_level, "Relative noise level, e.g. 0.05");
    pipeline->add_option("--seed", cfg.seed, "Noise seed");
    pipeline->add_option("--pad", cfg.pad_factor, "Pad factor (default 2 for pipelines 3-4)");
    pipeline->add_option("--support-radius", cfg.support_radius,
                         "Truncation radius for moment pipelines");
    pipeline->add_option("--inset-radius", cfg.inset_radius,
                         "Error metric inset disc radius (default 0.8 half_extent)");
    pipeline->add_flag("--hann", cfg.hann, "Hann-apodized ramp filter for pipeline 5");
    pipeline->add_flag("--exact-moment", cfg.exact_moment, "Exact moment weights");
    add_geometry_options(pipeline, cfg);
    pipeline->add_option("--out", cfg.out_dir, "Output directory")->required();

    CLI::App* report = app.add_subcommand("report", "Aggregate run reports into a table");
    report->add_option("paths", report_paths, "report.txt files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: config: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (phantom->parsed()) {
            cfg.command = "phantom";
            vline::run_phantom(cfg);
        } else if (forward->parsed()) {
            cfg.command = "forward";
            vline::run_forward(cfg);
        } else if (pipeline->parsed()) {
            cfg.command = "pipeline";
            const vline::ReconReport rep = vline::run_pipeline(cfg);
            std::cout << rep.to_text();
        } else if (report->parsed()) {
            std::vector<vline::ReconReport> reports;
            for (const std::string& p : report_paths) reports.push_back(vline::read_report(p));
            std::cout << vline::report_table(reports);
        }
    } catch (const vline::ConfigError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return kExitConfig;
    } catch (const vline::NumericError& e) {
        std::cerr << "error: numeric: " << e.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}
