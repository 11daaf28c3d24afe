#include "vline/eval.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "vline/errors.hpp"

namespace vline {

ScalarField add_noise(const ScalarField& data, const NoiseSpec& spec, bool* zero_data_flag) {
    if (zero_data_flag) *zero_data_flag = false;
    if (spec.level < 0.0) throw ConfigError("noise level must be >= 0");
    if (spec.level == 0.0) return data;

    double data_norm2 = 0.0;
    for (double v : data.values()) data_norm2 += v * v;
    if (data_norm2 == 0.0) {
        if (zero_data_flag) *zero_data_flag = true;
        return data;
    }

    std::mt19937_64 rng(spec.seed);
    std::vector<double> eta(data.values().size());
    double eta_norm2 = 0.0;
    if (spec.model == NoiseSpec::Model::GaussianL2) {
        std::normal_distribution<double> dist(0.0, 1.0);
        for (double& e : eta) {
            e = dist(rng);
            eta_norm2 += e * e;
        }
    } else {
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (double& e : eta) {
            e = dist(rng);
            eta_norm2 += e * e;
        }
    }
    const double scale = spec.level * std::sqrt(data_norm2) / std::sqrt(eta_norm2);

    ScalarField out = data;
    for (std::size_t k = 0; k < out.values().size(); ++k) out.values()[k] += scale * eta[k];
    return out;
}

namespace {

template <class Fn>
void for_each_inset_pixel(const Grid2D& g, double inset_radius, Fn&& fn) {
    const double r2 = inset_radius * inset_radius;
    for (int i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        for (int j = 0; j < g.n; ++j) {
            const double y = g.y(j);
            if (x * x + y * y < r2) fn(i, j);
        }
    }
}

}  // namespace

int inset_pixel_count(const Grid2D& grid, double inset_radius) {
    int count = 0;
    for_each_inset_pixel(grid, inset_radius, [&](int, int) { ++count; });
    return count;
}

double rel_l2(const ScalarField& a, const ScalarField& b, double inset_radius,
              bool* zero_ref_flag) {
    require_same_grid(a.grid(), b.grid(), "rel_l2");
    if (zero_ref_flag) *zero_ref_flag = false;
    double diff2 = 0.0, ref2 = 0.0;
    for_each_inset_pixel(a.grid(), inset_radius, [&](int i, int j) {
        const double d = a.at(i, j) - b.at(i, j);
        diff2 += d * d;
        ref2 += b.at(i, j) * b.at(i, j);
    });
    if (ref2 == 0.0) {
        if (zero_ref_flag) *zero_ref_flag = true;
        return std::sqrt(diff2);
    }
    return std::sqrt(diff2 / ref2);
}

double max_err(const ScalarField& a, const ScalarField& b, double inset_radius) {
    require_same_grid(a.grid(), b.grid(), "max_err");
    double worst = 0.0;
    for_each_inset_pixel(a.grid(), inset_radius, [&](int i, int j) {
        worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
    });
    return worst;
}

namespace {

std::string join(const std::vector<double>& v) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
    return os.str();
}

std::string join(const std::vector<std::string>& v) {
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
    return os.str();
}

std::vector<double> split_doubles(const std::string& s) {
    std::vector<double> out;
    std::istringstream is(s);
    double v;
    while (is >> v) out.push_back(v);
    return out;
}

std::vector<std::string> split_strings(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string v;
    while (is >> v) out.push_back(v);
    return out;
}

}  // namespace

std::string ReconReport::to_text() const {
    std::ostringstream os;
    os.precision(17);
    os << "pipeline = " << pipeline << "\n";
    os << "geometry = " << geometry << "\n";
    os << "n = " << n << "\n";
    os << "half_extent = " << half_extent << "\n";
    os << "noise_level = " << noise_level << "\n";
    os << "seed = " << seed << "\n";
    os << "component_rel_l2 = " << join(component_rel_l2) << "\n";
    os << "component_max_err = " << join(component_max_err) << "\n";
    os << "inset_radius = " << inset_radius << "\n";
    os << "wall_seconds = " << wall_seconds << "\n";
    os << "artifacts = " << join(artifacts) << "\n";
    for (const auto& [key, value] : extras) os << "extra." << key << " = " << value << "\n";
    return os.str();
}

ReconReport ReconReport::from_text(const std::string& text) {
    ReconReport r;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) continue;
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 3);
        if (key == "pipeline") r.pipeline = value;
        else if (key == "geometry") r.geometry = value;
        else if (key == "n") r.n = std::stoi(value);
        else if (key == "half_extent") r.half_extent = std::stod(value);
        else if (key == "noise_level") r.noise_level = std::stod(value);
        else if (key == "seed") r.seed = std::stoull(value);
        else if (key == "component_rel_l2") r.component_rel_l2 = split_doubles(value);
        else if (key == "component_max_err") r.component_max_err = split_doubles(value);
        else if (key == "inset_radius") r.inset_radius = std::stod(value);
        else if (key == "wall_seconds") r.wall_seconds = std::stod(value);
        else if (key == "artifacts") r.artifacts = split_strings(value);
        else if (key.rfind("extra.", 0) == 0) r.extras[key.substr(6)] = value;
    }
    return r;
}

void write_report(const std::string& path, const ReconReport& report) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    out << report.to_text();
}

ReconReport read_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open report: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return ReconReport::from_text(os.str());
}

}  // namespace vline
