#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vline/eval.hpp"
#include "vline/grid.hpp"

namespace vline {

/// Everything needed to reproduce one run. Written as run_config.txt beside
/// the outputs of every command; identical configs reproduce all output
/// arrays byte for byte.
struct RunConfig {
    std::string command;  // phantom | forward | pipeline
    int phantom_id = 0;   // 1..3, 0 = none
    std::string input_path;
    std::string image_path;
    int n = 160;
    double half_extent = 1.0;
    double u_angle_deg = 45.0;
    double v_angle_deg = 135.0;
    std::vector<double> star_angles_deg{0.0, 120.0, 240.0};
    std::vector<double> star_weights{1.0, 1.0, 1.0};
    std::string transform;  // forward: lvt | tvt | lvt1 | tvt1 | star
    int pipeline_id = 0;    // 1..5
    std::string special_field = "solenoidal";  // pipeline 1: solenoidal | potential
    double noise_level = 0.0;
    std::uint64_t seed = 0;
    double pad_factor = -1.0;  // < 0: pipeline default (2 for pipelines 3-4, else 1)
    double support_radius = 0.9;
    double inset_radius = -1.0;  // < 0: 0.8 * half_extent
    bool hann = false;
    bool exact_moment = false;
    std::string out_dir;  // empty: compute without writing files

    double resolved_pad_factor() const;
    double resolved_inset_radius() const;
    std::string geometry_text() const;
    std::string to_text() const;
    static RunConfig from_text(const std::string& text);
};

/// Writes phantom.vlf, components.png and quiver.png (plus run_config.txt).
void run_phantom(const RunConfig& cfg);

/// Reads the input field, writes transform field file(s) and PNGs.
void run_forward(const RunConfig& cfg);

/// Forward data (optionally noisy), inversion, metrics; writes recon field
/// file, PNGs, difference images and report.txt when out_dir is set.
ReconReport run_pipeline(const RunConfig& cfg);

/// Pipeline x noise-level error matrix from a set of reports.
std::string report_table(const std::vector<ReconReport>& reports);

}  // namespace vline
