#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vline/grid.hpp"

namespace vline {

/// Additive noise scaled to an exact fraction of the data norm:
/// out = data + eta with ||eta||_2 = level * ||data||_2, deterministic in
/// (level, seed). Gaussian samples by default, uniform behind the flag.
struct NoiseSpec {
    double level = 0.0;
    std::uint64_t seed = 0;
    enum class Model { GaussianL2, UniformL2 } model = Model::GaussianL2;
};

/// Returns the noisy field. A zero input with level > 0 cannot be scaled;
/// it is returned unchanged and *zero_data_flag (when given) is set.
ScalarField add_noise(const ScalarField& data, const NoiseSpec& spec,
                      bool* zero_data_flag = nullptr);

/// ||a - b||_2 / ||b||_2 over the pixels inside the disc of radius
/// inset_radius about the origin (world units). When the reference norm is
/// zero the absolute norm ||a - b||_2 is returned and *zero_ref_flag set.
double rel_l2(const ScalarField& a, const ScalarField& b, double inset_radius,
              bool* zero_ref_flag = nullptr);

/// max |a - b| over the same inset disc.
double max_err(const ScalarField& a, const ScalarField& b, double inset_radius);

/// Number of pixels inside the inset disc.
int inset_pixel_count(const Grid2D& grid, double inset_radius);

/// Metrics, provenance and artifact paths of one reconstruction run.
/// Serialized as "key = value" lines (lists space-separated).
struct ReconReport {
    std::string pipeline;
    std::string geometry;
    int n = 0;
    double half_extent = 1.0;
    double noise_level = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> component_rel_l2;
    std::vector<double> component_max_err;
    double inset_radius = 0.8;
    double wall_seconds = 0.0;
    std::vector<std::string> artifacts;
    std::map<std::string, std::string> extras;

    std::string to_text() const;
    static ReconReport from_text(const std::string& text);
};

void write_report(const std::string& path, const ReconReport& report);
ReconReport read_report(const std::string& path);

}  // namespace vline
