#pragma once

#include <string>
#include <vector>

#include "vline/grid.hpp"
#include "vline/vlt.hpp"

namespace vline {

/// Parallel-beam Radon data R h(psi, s): line integrals along {x . psi = s}
/// with psi = (cos a, sin a), a in degrees. Radial offsets are
/// s_k = (k - m) h_s for k = 0..2m with m = floor(n/sqrt(2)) + 2 and h_s one
/// source-pixel width, so an n = 512 image yields a 180 x 729 sinogram on the
/// default angle set 0..179.
struct Sinogram {
    std::vector<double> angles_deg;
    int m = 0;
    double h_s = 0.0;
    int source_n = 0;
    double source_half_extent = 1.0;
    std::vector<double> values;  // angle-major: values[a * num_s() + k]

    int num_angles() const { return static_cast<int>(angles_deg.size()); }
    int num_s() const { return 2 * m + 1; }
    double s(int k) const { return (k - m) * h_s; }
    double& at(int a, int k) { return values[static_cast<std::size_t>(a) * num_s() + k]; }
    double at(int a, int k) const { return values[static_cast<std::size_t>(a) * num_s() + k]; }
};

/// Radial half-count m = floor(n / sqrt(2)) + 2.
int radial_half_count(int n);

/// 0, 1, ..., 179 degrees.
std::vector<double> default_angles();

Sinogram radon(const ScalarField& field, const std::vector<double>& angles_deg);
Sinogram radon(const ScalarField& field);

/// d/ds by central differences over the radial offset, one-sided at the ends.
Sinogram d_ds(const Sinogram& sino);

enum class FbpFilter { Ramp, Hann };

/// Filtered backprojection: per-angle Ram-Lak filtering via FFT (zero-padded
/// to the next power of two >= 2 x radial count, optional Hann apodization),
/// then backprojection with linear interpolation in s. Rejects angle sets
/// with fewer than 8 angles.
ScalarField iradon(const Sinogram& sino, FbpFilter filter = FbpFilter::Ramp);

/// Star inversion matrix at one projection angle:
/// gamma(psi) = -sum_i c_i gamma_i / (psi . gamma_i),  Q = [gamma; gamma_perp]^-1.
/// Flagged singular when any |psi . gamma_i| < 1e-6 or |gamma(psi)| is too
/// small for a stable inverse. Throws ConfigError for symmetric stars, whose
/// Q is undefined at every angle.
struct QMatrix {
    Vec2 psi;
    Vec2 gamma_psi;
    double q[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    bool singular = false;
};
QMatrix q_matrix(double psi_degrees, const StarGeometry& s);

// Sinogram file: header "VLS1 <num_angles> <num_s> <h_s>" + little-endian
// 64-bit floats, row-major. The source grid size is inferred on load from
// num_s via the m-formula.
void write_sinogram(const std::string& path, const Sinogram& sino);
Sinogram read_sinogram(const std::string& path);

}  // namespace vline
