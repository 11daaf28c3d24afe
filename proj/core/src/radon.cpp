#include "vline/radon.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/FFT>

#include "vline/beam.hpp"
#include "vline/errors.hpp"
#include "vline/parallel.hpp"

namespace vline {

int radial_half_count(int n) { return static_cast<int>(std::floor(n / std::sqrt(2.0))) + 2; }

std::vector<double> default_angles() {
    std::vector<double> a(180);
    for (int k = 0; k < 180; ++k) a[k] = static_cast<double>(k);
    return a;
}

Sinogram radon(const ScalarField& field, const std::vector<double>& angles_deg) {
    const Grid2D& g = field.grid();
    Sinogram sino;
    sino.angles_deg = angles_deg;
    sino.m = radial_half_count(g.n);
    sino.h_s = g.spacing;
    sino.source_n = g.n;
    sino.source_half_extent = g.half_extent;
    sino.values.assign(static_cast<std::size_t>(sino.num_angles()) * sino.num_s(), 0.0);

    parallel_for(sino.num_angles(), [&](int a) {
        const Vec2 psi = unit_from_angle_deg(sino.angles_deg[a]);
        const Vec2 along = psi.perp();
        for (int k = 0; k < sino.num_s(); ++k)
            sino.at(a, k) = line_integral(field, sino.s(k) * psi, along);
    });
    return sino;
}

Sinogram radon(const ScalarField& field) { return radon(field, default_angles()); }

Sinogram d_ds(const Sinogram& sino) {
    Sinogram out = sino;
    const int ns = sino.num_s();
    const double h = sino.h_s;
    for (int a = 0; a < sino.num_angles(); ++a) {
        out.at(a, 0) = (sino.at(a, 1) - sino.at(a, 0)) / h;
        out.at(a, ns - 1) = (sino.at(a, ns - 1) - sino.at(a, ns - 2)) / h;
        for (int k = 1; k < ns - 1; ++k)
            out.at(a, k) = (sino.at(a, k + 1) - sino.at(a, k - 1)) / (2.0 * h);
    }
    return out;
}

namespace {

int next_pow2(int v) {
    int p = 1;
    while (p < v) p *= 2;
    return p;
}

// Frequency response of the band-limited ramp: FFT of the spatial-domain
// Ram-Lak kernel h(0) = 1/(4 h_s^2), h(odd k) = -1/(pi^2 k^2 h_s^2),
// wrapped onto length L. Designing the filter in the spatial domain keeps
// the small DC term that a plain |w| ramp would drop.
std::vector<double> ramp_response(int L, double h_s, FbpFilter filter) {
    std::vector<double> kernel(L, 0.0);
    kernel[0] = 1.0 / (4.0 * h_s * h_s);
    const double c = -1.0 / (std::numbers::pi * std::numbers::pi * h_s * h_s);
    for (int k = 1; k <= L / 2; k += 2) {
        const double v = c / (static_cast<double>(k) * k);
        kernel[k] = v;
        kernel[L - k] = v;
    }
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> freq;
    fft.fwd(freq, kernel);
    std::vector<double> response(L);
    for (int i = 0; i < L; ++i) response[i] = freq[i].real();
    if (filter == FbpFilter::Hann) {
        for (int i = 0; i < L; ++i) {
            const int f = std::min(i, L - i);  // 0..L/2
            response[i] *= 0.5 * (1.0 + std::cos(2.0 * std::numbers::pi * f / L));
        }
    }
    return response;
}

}  // namespace

ScalarField iradon(const Sinogram& sino, FbpFilter filter) {
    if (sino.num_angles() < 8)
        throw ConfigError("iradon needs at least 8 projection angles");
    const int ns = sino.num_s();
    const int L = next_pow2(std::max(2 * ns, 64));
    const std::vector<double> response = ramp_response(L, sino.h_s, filter);

    // filtered projections, one row per angle
    std::vector<std::vector<double>> q(sino.num_angles());
    parallel_for(sino.num_angles(), [&](int a) {
        Eigen::FFT<double> fft;
        std::vector<std::complex<double>> row(L, 0.0), freq;
        for (int k = 0; k < ns; ++k) row[k] = sino.at(a, k);
        fft.fwd(freq, row);
        for (int i = 0; i < L; ++i) freq[i] *= response[i];
        std::vector<std::complex<double>> filtered;
        fft.inv(filtered, freq);
        q[a].resize(ns);
        for (int k = 0; k < ns; ++k) q[a][k] = filtered[k].real() * sino.h_s;
    });

    const Grid2D grid = make_grid(sino.source_n, sino.source_half_extent);
    ScalarField out(grid);
    const double dpsi = std::numbers::pi / sino.num_angles();
    std::vector<Vec2> psis(sino.num_angles());
    for (int a = 0; a < sino.num_angles(); ++a) psis[a] = unit_from_angle_deg(sino.angles_deg[a]);

    parallel_for(grid.n, [&](int i) {
        for (int j = 0; j < grid.n; ++j) {
            const Vec2 p = grid.center(i, j);
            double sum = 0.0;
            for (int a = 0; a < sino.num_angles(); ++a) {
                const double s = p.dot(psis[a]);
                const double pos = s / sino.h_s + sino.m;
                const int k0 = static_cast<int>(std::floor(pos));
                if (k0 < 0 || k0 >= ns - 1) continue;
                const double frac = pos - k0;
                sum += (1.0 - frac) * q[a][k0] + frac * q[a][k0 + 1];
            }
            out.at(i, j) = sum * dpsi;
        }
    });
    return out;
}

QMatrix q_matrix(double psi_degrees, const StarGeometry& s) {
    if (s.is_symmetric())
        throw ConfigError("q_matrix is undefined for a symmetric star");
    QMatrix qm;
    qm.psi = unit_from_angle_deg(psi_degrees);
    Vec2 gamma{0.0, 0.0};
    for (int b = 0; b < s.branch_count(); ++b) {
        const double d = qm.psi.dot(s.directions[b]);
        if (std::abs(d) < 1e-6) {
            qm.singular = true;
            return qm;
        }
        gamma = gamma - (s.weights[b] / d) * s.directions[b];
    }
    qm.gamma_psi = gamma;
    // [gamma; gamma_perp] is a scaled rotation; its inverse blows up as
    // |gamma| -> 0, which is the ill-conditioned case to guard.
    const double norm2 = gamma.dot(gamma);
    if (norm2 < 1e-8) {
        qm.singular = true;
        return qm;
    }
    qm.q[0][0] = gamma.x / norm2;
    qm.q[0][1] = -gamma.y / norm2;
    qm.q[1][0] = gamma.y / norm2;
    qm.q[1][1] = gamma.x / norm2;
    return qm;
}

void write_sinogram(const std::string& path, const Sinogram& sino) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    char header[96];
    std::snprintf(header, sizeof(header), "VLS1 %d %d %.17g\n", sino.num_angles(), sino.num_s(),
                  sino.h_s);
    out << header;
    out.write(reinterpret_cast<const char*>(sino.values.data()),
              static_cast<std::streamsize>(sino.values.size() * sizeof(double)));
    if (!out) throw ConfigError("write failed: " + path);
}

Sinogram read_sinogram(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("cannot read header: " + path);
    std::istringstream is(line);
    std::string magic;
    int num_angles = 0, num_s = 0;
    double h_s = 0.0;
    is >> magic >> num_angles >> num_s >> h_s;
    if (!is || magic != "VLS1" || num_angles < 1 || num_s < 3 || num_s % 2 == 0 || h_s <= 0.0)
        throw ConfigError("not a valid VLS1 sinogram file: " + path);

    Sinogram sino;
    sino.m = (num_s - 1) / 2;
    sino.h_s = h_s;
    // the header carries no source size; invert the m-formula
    sino.source_n = static_cast<int>(std::lround((sino.m - 2) * std::sqrt(2.0)));
    sino.source_half_extent = 0.5 * sino.source_n * h_s;
    sino.angles_deg.resize(num_angles);
    for (int a = 0; a < num_angles; ++a)
        sino.angles_deg[a] = 180.0 * a / num_angles;
    sino.values.resize(static_cast<std::size_t>(num_angles) * num_s);
    in.read(reinterpret_cast<char*>(sino.values.data()),
            static_cast<std::streamsize>(sino.values.size() * sizeof(double)));
    if (!in) throw ConfigError("truncated sinogram file: " + path);
    for (double v : sino.values)
        if (!std::isfinite(v)) throw NumericError("non-finite value in sinogram file: " + path);
    return sino;
}

}  // namespace vline
