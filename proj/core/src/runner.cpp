#include "vline/runner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "vline/errors.hpp"
#include "vline/field_io.hpp"
#include "vline/phantom.hpp"
#include "vline/png_io.hpp"
#include "vline/recon.hpp"

namespace vline {

namespace fs = std::filesystem;

double RunConfig::resolved_pad_factor() const {
    if (pad_factor >= 1.0) return pad_factor;
    if (pipeline_id == 3 || pipeline_id == 4) {
        // nominally 2, but never less than the strip-tail requirement of the
        // actual geometry (2.28 for the default setup; see required_pad_factor)
        const VLineGeometry g = VLineGeometry::from_angles_deg(u_angle_deg, v_angle_deg);
        return std::max(2.0, required_pad_factor(g, support_radius, make_grid(n, half_extent)));
    }
    // star data truncated at the square loses an O(1/pad) strip tail; factor 3
    // measured 9% reconstruction error vs 49% unpadded on the default star
    if (pipeline_id == 5) return 3.0;
    return 1.0;
}

double RunConfig::resolved_inset_radius() const {
    return inset_radius > 0.0 ? inset_radius : 0.8 * half_extent;
}

std::string RunConfig::geometry_text() const {
    std::ostringstream os;
    if (pipeline_id == 5 || transform == "star") {
        os << "star_angles=";
        for (std::size_t i = 0; i < star_angles_deg.size(); ++i)
            os << (i ? "," : "") << star_angles_deg[i];
        os << ";weights=";
        for (std::size_t i = 0; i < star_weights.size(); ++i)
            os << (i ? "," : "") << star_weights[i];
    } else {
        os << "u=" << u_angle_deg << ";v=" << v_angle_deg;
    }
    return os.str();
}

namespace {

std::string join_list(const std::vector<double>& v) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

}  // namespace

std::string RunConfig::to_text() const {
    std::ostringstream os;
    os.precision(17);
    os << "command = " << command << "\n";
    os << "phantom_id = " << phantom_id << "\n";
    os << "input_path = " << input_path << "\n";
    os << "image_path = " << image_path << "\n";
    os << "n = " << n << "\n";
    os << "half_extent = " << half_extent << "\n";
    os << "u_angle_deg = " << u_angle_deg << "\n";
    os << "v_angle_deg = " << v_angle_deg << "\n";
    os << "star_angles_deg = " << join_list(star_angles_deg) << "\n";
    os << "star_weights = " << join_list(star_weights) << "\n";
    os << "transform = " << transform << "\n";
    os << "pipeline_id = " << pipeline_id << "\n";
    os << "special_field = " << special_field << "\n";
    os << "noise_level = " << noise_level << "\n";
    os << "seed = " << seed << "\n";
    os << "pad_factor = " << pad_factor << "\n";
    os << "support_radius = " << support_radius << "\n";
    os << "inset_radius = " << inset_radius << "\n";
    os << "hann = " << (hann ? 1 : 0) << "\n";
    os << "exact_moment = " << (exact_moment ? 1 : 0) << "\n";
    os << "out_dir = " << out_dir << "\n";
    return os.str();
}

RunConfig RunConfig::from_text(const std::string& text) {
    RunConfig c;
    std::istringstream is(text);
    std::string line;
    auto parse_list = [](const std::string& s) {
        std::vector<double> out;
        std::istringstream ls(s);
        double v;
        while (ls >> v) out.push_back(v);
        return out;
    };
    while (std::getline(is, line)) {
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) continue;
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 3);
        if (key == "command") c.command = value;
        else if (key == "phantom_id") c.phantom_id = std::stoi(value);
        else if (key == "input_path") c.input_path = value;
        else if (key == "image_path") c.image_path = value;
        else if (key == "n") c.n = std::stoi(value);
        else if (key == "half_extent") c.half_extent = std::stod(value);
        else if (key == "u_angle_deg") c.u_angle_deg = std::stod(value);
        else if (key == "v_angle_deg") c.v_angle_deg = std::stod(value);
        else if (key == "star_angles_deg") c.star_angles_deg = parse_list(value);
        else if (key == "star_weights") c.star_weights = parse_list(value);
        else if (key == "transform") c.transform = value;
        else if (key == "pipeline_id") c.pipeline_id = std::stoi(value);
        else if (key == "special_field") c.special_field = value;
        else if (key == "noise_level") c.noise_level = std::stod(value);
        else if (key == "seed") c.seed = std::stoull(value);
        else if (key == "pad_factor") c.pad_factor = std::stod(value);
        else if (key == "support_radius") c.support_radius = std::stod(value);
        else if (key == "inset_radius") c.inset_radius = std::stod(value);
        else if (key == "hann") c.hann = value == "1";
        else if (key == "exact_moment") c.exact_moment = value == "1";
        else if (key == "out_dir") c.out_dir = value;
    }
    return c;
}

namespace {

VLineGeometry vline_geometry(const RunConfig& cfg) {
    return VLineGeometry::from_angles_deg(cfg.u_angle_deg, cfg.v_angle_deg);
}

StarGeometry star_geometry(const RunConfig& cfg) {
    return StarGeometry::from_angles_deg(cfg.star_angles_deg, cfg.star_weights);
}

void write_config(const RunConfig& cfg) {
    std::ofstream out(fs::path(cfg.out_dir) / "run_config.txt");
    if (!out) throw ConfigError("cannot write run_config.txt under " + cfg.out_dir);
    out << cfg.to_text();
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    return (fs::path(cfg.out_dir) / name).string();
}

/// Input field for forward/pipeline runs and its provenance label.
VectorField load_input_field(const RunConfig& cfg) {
    const int sources = (cfg.phantom_id != 0) + !cfg.image_path.empty() + !cfg.input_path.empty();
    if (sources != 1)
        throw ConfigError("exactly one of --phantom, --image, --in must be given");
    if (cfg.phantom_id != 0) {
        const Grid2D grid = make_grid(cfg.n, cfg.half_extent);
        switch (cfg.phantom_id) {
            case 1: return phantom1(grid);
            case 2: return phantom2(grid);
            case 3: return phantom3(grid);
            default: throw ConfigError("unknown phantom id (expected 1..3)");
        }
    }
    if (!cfg.image_path.empty()) return field_from_rgb_image(cfg.image_path);
    return read_vector_field(cfg.input_path);
}

ScalarField noisy(const ScalarField& data, const RunConfig& cfg, int channel) {
    NoiseSpec spec;
    spec.level = cfg.noise_level;
    spec.seed = cfg.seed + static_cast<std::uint64_t>(channel);
    return add_noise(data, spec);
}

}  // namespace

void run_phantom(const RunConfig& cfg) {
    if (cfg.phantom_id < 1 || cfg.phantom_id > 3)
        throw ConfigError("unknown phantom id (expected 1..3)");
    const Grid2D grid = make_grid(cfg.n, cfg.half_extent);
    VectorField f(grid);
    switch (cfg.phantom_id) {
        case 1: f = phantom1(grid); break;
        case 2: f = phantom2(grid); break;
        case 3: f = phantom3(grid); break;
    }
    if (cfg.out_dir.empty()) return;
    fs::create_directories(cfg.out_dir);
    write_field(out_path(cfg, "phantom.vlf"), f);
    write_components_png(out_path(cfg, "components.png"), f);
    write_quiver_png(out_path(cfg, "quiver.png"), f);
    write_config(cfg);
}

void run_forward(const RunConfig& cfg) {
    RunConfig resolved = cfg;
    const VectorField f = load_input_field(cfg);
    resolved.n = f.grid().n;
    resolved.half_extent = f.grid().half_extent;

    if (!cfg.out_dir.empty()) fs::create_directories(cfg.out_dir);
    auto emit = [&](const std::string& name, const ScalarField& data) {
        if (cfg.out_dir.empty()) return;
        write_field(out_path(cfg, name + ".vlf"), data);
        write_scalar_png(out_path(cfg, name + ".png"), data);
    };

    if (cfg.transform == "star") {
        const StarData data = star(f, star_geometry(cfg));
        emit("star_longitudinal", data.longitudinal);
        emit("star_transversal", data.transversal);
    } else {
        const VLineGeometry g = vline_geometry(cfg);
        if (cfg.transform == "lvt") emit("lvt", lvt(f, g));
        else if (cfg.transform == "tvt") emit("tvt", tvt(f, g));
        else if (cfg.transform == "lvt1") emit("lvt1", lvt1(f, g, cfg.exact_moment));
        else if (cfg.transform == "tvt1") emit("tvt1", tvt1(f, g, cfg.exact_moment));
        else throw ConfigError("unknown transform '" + cfg.transform +
                               "' (expected lvt|tvt|lvt1|tvt1|star)");
    }
    if (!cfg.out_dir.empty()) write_config(resolved);
}

namespace {

struct PipelineResult {
    std::vector<ScalarField> recon;  // 1 component for pipeline 1, else 2
    std::vector<ScalarField> truth;
    double pad_used = 1.0;
};

PipelineResult execute_pipeline(const RunConfig& cfg) {
    PipelineResult res;
    const double pad = cfg.resolved_pad_factor();

    if (cfg.pipeline_id == 1) {
        const Grid2D grid = make_grid(cfg.n, cfg.half_extent);
        const Potential w = bump_potential();
        const VLineGeometry g = vline_geometry(cfg);
        if (cfg.special_field == "potential") {
            const VectorField f = gradient_field(w, grid);
            const ScalarField data = noisy(tvt(f, g), cfg, 0);
            res.recon.push_back(recover_potential(data, g));
        } else if (cfg.special_field == "solenoidal") {
            const VectorField f = perp_gradient_field(w, grid);
            const ScalarField data = noisy(lvt(f, g), cfg, 0);
            res.recon.push_back(recover_solenoidal(data, g));
        } else {
            throw ConfigError("special_field must be 'potential' or 'solenoidal'");
        }
        res.truth.push_back(sample_scalar(grid, w.value));
        return res;
    }

    VectorField f = load_input_field(cfg);
    const Grid2D grid = f.grid();

    switch (cfg.pipeline_id) {
        case 2: {
            const VLineGeometry g = vline_geometry(cfg);
            const ScalarField Lf = noisy(lvt(f, g), cfg, 0);
            const ScalarField Tf = noisy(tvt(f, g), cfg, 1);
            const VectorField rec = recover_from_lvt_tvt(Lf, Tf, g);
            res.recon = {rec.f1(), rec.f2()};
            break;
        }
        case 3:
        case 4: {
            const VLineGeometry g = vline_geometry(cfg);
            f = truncate_to_disc(f, cfg.support_radius);
            const double pad_used =
                cfg.pad_factor >= 1.0
                    ? pad
                    : std::max(2.0, required_pad_factor(g, cfg.support_radius, grid));
            const VectorField fp = embed(f, padded_grid(grid, pad_used));
            const PadSpec spec{pad_used, cfg.support_radius};
            res.pad_used = pad_used;
            VectorField rec(fp.grid());
            if (cfg.pipeline_id == 3) {
                const ScalarField Lf = noisy(lvt(fp, g), cfg, 0);
                const ScalarField If = noisy(lvt1(fp, g, cfg.exact_moment), cfg, 1);
                rec = recover_from_lvt_moment(Lf, If, g, spec);
            } else {
                const ScalarField Tf = noisy(tvt(fp, g), cfg, 0);
                const ScalarField Jf = noisy(tvt1(fp, g, cfg.exact_moment), cfg, 1);
                rec = recover_from_tvt_moment(Tf, Jf, g, spec);
            }
            const VectorField cropped = restrict_to(rec, grid);
            res.recon = {cropped.f1(), cropped.f2()};
            break;
        }
        case 5: {
            const StarGeometry s = star_geometry(cfg);
            res.pad_used = pad;
            const VectorField fp = pad > 1.0 ? embed(f, padded_grid(grid, pad)) : f;
            const StarData data = star(fp, s);
            const ScalarField sl = noisy(data.longitudinal, cfg, 0);
            const ScalarField st = noisy(data.transversal, cfg, 1);
            const VectorField rec =
                recover_from_star(sl, st, s, cfg.hann ? FbpFilter::Hann : FbpFilter::Ramp);
            res.recon = {restrict_to(rec.f1(), grid), restrict_to(rec.f2(), grid)};
            break;
        }
        default:
            throw ConfigError("pipeline id must be 1..5");
    }
    res.truth = {f.f1(), f.f2()};
    return res;
}

}  // namespace

ReconReport run_pipeline(const RunConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    RunConfig resolved = cfg;
    const PipelineResult res = execute_pipeline(cfg);
    resolved.n = res.recon.front().grid().n;
    resolved.half_extent = res.recon.front().grid().half_extent;

    ReconReport report;
    report.pipeline = std::to_string(cfg.pipeline_id);
    report.geometry = cfg.geometry_text();
    report.n = resolved.n;
    report.half_extent = resolved.half_extent;
    report.noise_level = cfg.noise_level;
    report.seed = cfg.seed;
    report.inset_radius = resolved.resolved_inset_radius();
    {
        std::ostringstream os;
        os.precision(17);
        os << res.pad_used;
        report.extras["pad_factor_used"] = os.str();
    }
    for (std::size_t c = 0; c < res.recon.size(); ++c) {
        report.component_rel_l2.push_back(
            rel_l2(res.recon[c], res.truth[c], report.inset_radius));
        report.component_max_err.push_back(
            max_err(res.recon[c], res.truth[c], report.inset_radius));
    }

    if (!cfg.out_dir.empty()) {
        fs::create_directories(cfg.out_dir);
        auto note_bounds = [&](const std::string& key, const ColormapBounds& b) {
            std::ostringstream os;
            os.precision(17);
            os << b.lo << " " << b.hi;
            report.extras[key] = os.str();
        };
        if (res.recon.size() == 1) {
            write_field(out_path(cfg, "recon.vlf"), res.recon[0]);
            note_bounds("png_bounds.recon",
                        write_scalar_png(out_path(cfg, "recon.png"), res.recon[0]));
            note_bounds("png_bounds.diff",
                        write_scalar_png(out_path(cfg, "diff.png"),
                                         res.recon[0] - res.truth[0]));
            report.artifacts = {out_path(cfg, "recon.vlf"), out_path(cfg, "recon.png"),
                                out_path(cfg, "diff.png")};
        } else {
            const VectorField rec(res.recon[0], res.recon[1]);
            write_field(out_path(cfg, "recon.vlf"), rec);
            note_bounds("png_bounds.recon_f1",
                        write_scalar_png(out_path(cfg, "recon_f1.png"), res.recon[0]));
            note_bounds("png_bounds.recon_f2",
                        write_scalar_png(out_path(cfg, "recon_f2.png"), res.recon[1]));
            note_bounds("png_bounds.diff_f1",
                        write_scalar_png(out_path(cfg, "diff_f1.png"),
                                         res.recon[0] - res.truth[0]));
            note_bounds("png_bounds.diff_f2",
                        write_scalar_png(out_path(cfg, "diff_f2.png"),
                                         res.recon[1] - res.truth[1]));
            report.artifacts = {out_path(cfg, "recon.vlf"), out_path(cfg, "recon_f1.png"),
                                out_path(cfg, "recon_f2.png"), out_path(cfg, "diff_f1.png"),
                                out_path(cfg, "diff_f2.png")};
        }
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

    if (!cfg.out_dir.empty()) {
        write_report(out_path(cfg, "report.txt"), report);
        write_config(resolved);
    }
    return report;
}

std::string report_table(const std::vector<ReconReport>& reports) {
    std::set<double> levels;
    std::set<std::string> pipelines;
    // cell: mean over components and over reports sharing (pipeline, level)
    std::map<std::pair<std::string, double>, std::pair<double, int>> cells;
    for (const ReconReport& r : reports) {
        levels.insert(r.noise_level);
        pipelines.insert(r.pipeline);
        double mean = 0.0;
        for (double e : r.component_rel_l2) mean += e;
        if (!r.component_rel_l2.empty()) mean /= static_cast<double>(r.component_rel_l2.size());
        auto& cell = cells[{r.pipeline, r.noise_level}];
        cell.first += mean;
        cell.second += 1;
    }

    std::ostringstream os;
    os << std::left << std::setw(10) << "pipeline";
    for (double l : levels) {
        std::ostringstream head;
        head << "rel_l2@" << l * 100.0 << "%";
        os << std::setw(16) << head.str();
    }
    os << "\n";
    for (const std::string& p : pipelines) {
        os << std::left << std::setw(10) << p;
        for (double l : levels) {
            const auto it = cells.find({p, l});
            if (it == cells.end()) {
                os << std::setw(16) << "-";
            } else {
                std::ostringstream cell;
                cell << std::fixed << std::setprecision(4)
                     << it->second.first / it->second.second;
                os << std::setw(16) << cell.str();
            }
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace vline
