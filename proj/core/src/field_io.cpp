#include "vline/field_io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vline/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "field files are little-endian; big-endian hosts are unsupported");

namespace vline {

namespace {

struct Header {
    int n = 0;
    double half_extent = 0.0;
    int ncomp = 0;
};

void write_header_and_data(const std::string& path, const Grid2D& grid, int ncomp,
                           const std::vector<const std::vector<double>*>& comps) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    char header[128];
    std::snprintf(header, sizeof(header), "VLF1 %d %.17g %d\n", grid.n, grid.half_extent, ncomp);
    out << header;
    for (const auto* c : comps)
        out.write(reinterpret_cast<const char*>(c->data()),
                  static_cast<std::streamsize>(c->size() * sizeof(double)));
    if (!out) throw ConfigError("write failed: " + path);
}

Header read_header(std::istream& in, const std::string& path) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("cannot read header: " + path);
    std::istringstream is(line);
    std::string magic;
    Header h;
    is >> magic >> h.n >> h.half_extent >> h.ncomp;
    if (!is || magic != "VLF1") throw ConfigError("not a VLF1 field file: " + path);
    if (h.n < 3 || h.half_extent <= 0.0 || (h.ncomp != 1 && h.ncomp != 2))
        throw ConfigError("invalid VLF1 header in " + path);
    return h;
}

ScalarField read_component(std::istream& in, const Grid2D& grid, const std::string& path) {
    ScalarField f(grid);
    in.read(reinterpret_cast<char*>(f.values().data()),
            static_cast<std::streamsize>(f.values().size() * sizeof(double)));
    if (!in) throw ConfigError("truncated field file: " + path);
    for (double v : f.values())
        if (!std::isfinite(v)) throw NumericError("non-finite value in field file: " + path);
    return f;
}

}  // namespace

void write_field(const std::string& path, const ScalarField& f) {
    write_header_and_data(path, f.grid(), 1, {&f.values()});
}

void write_field(const std::string& path, const VectorField& f) {
    write_header_and_data(path, f.grid(), 2, {&f.f1().values(), &f.f2().values()});
}

int field_file_components(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open: " + path);
    return read_header(in, path).ncomp;
}

ScalarField read_scalar_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open: " + path);
    const Header h = read_header(in, path);
    if (h.ncomp != 1) throw ConfigError("expected 1-component field file: " + path);
    return read_component(in, make_grid(h.n, h.half_extent), path);
}

VectorField read_vector_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open: " + path);
    const Header h = read_header(in, path);
    if (h.ncomp != 2) throw ConfigError("expected 2-component field file: " + path);
    const Grid2D grid = make_grid(h.n, h.half_extent);
    ScalarField c1 = read_component(in, grid, path);
    ScalarField c2 = read_component(in, grid, path);
    return {std::move(c1), std::move(c2)};
}

}  // namespace vline
