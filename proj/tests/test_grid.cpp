#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "vline/errors.hpp"
#include "vline/field_io.hpp"
#include "vline/grid.hpp"
#include "vline/phantom.hpp"

using namespace vline;

TEST_CASE("make_grid rejects degenerate inputs") {
    CHECK_THROWS_AS(make_grid(2, 1.0), ConfigError);
    CHECK_THROWS_AS(make_grid(160, 0.0), ConfigError);
    CHECK_THROWS_AS(make_grid(160, -1.0), ConfigError);
}

TEST_CASE("pixel-center convention") {
    const Grid2D g = make_grid(160, 1.0);
    CHECK(g.spacing == doctest::Approx(0.0125).epsilon(1e-15));
    CHECK(g.x(0) == doctest::Approx(-0.99375).epsilon(1e-15));
    CHECK(g.y(g.n - 1) == doctest::Approx(0.99375).epsilon(1e-15));

    const Grid2D g512 = make_grid(512, 1.0);
    CHECK(g512.spacing == doctest::Approx(2.0 / 512).epsilon(1e-16));

    // centers strictly inside, index map inverts the center map
    for (int i : {0, 7, 159}) {
        CHECK(std::abs(g.x(i)) < g.half_extent);
        CHECK(g.index_of(g.x(i)) == i);
    }
}

TEST_CASE("sample_scalar basics") {
    const Grid2D g = make_grid(4, 1.0);
    const ScalarField zero = sample_scalar(g, [](double, double) { return 0.0; });
    for (double v : zero.values()) CHECK(v == 0.0);

    // coordinate readback
    const ScalarField xs = sample_scalar(g, [](double x, double) { return x; });
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) CHECK(xs.at(i, j) == g.x(i));

    // phantom-1 style formula at the pixel center nearest the origin
    const Grid2D g160 = make_grid(160, 1.0);
    const ScalarField f =
        sample_scalar(g160, [](double x, double y) { return phantom1_f1(x, y); });
    const int ic = g160.index_of(0.0), jc = g160.index_of(0.0);
    const double xc = g160.x(ic), yc = g160.y(jc);
    CHECK(f.at(ic, jc) == doctest::Approx(1.0 + std::sin(M_PI * xc) * std::cos(M_PI * yc))
                              .epsilon(1e-15));

    CHECK_THROWS_AS(sample_scalar(g, [](double, double) { return 1.0 / 0.0; }), NumericError);
    try {
        sample_scalar(g, [](double x, double) { return x > 0 ? std::nan("") : 0.0; });
        CHECK(false);
    } catch (const NumericError& e) {
        CHECK(std::string(e.what()).find("pixel") != std::string::npos);
    }
}

TEST_CASE("polynomial sampling is exact at pixel centers") {
    const Grid2D g = make_grid(33, 1.25);
    auto poly = [](double x, double y) { return 2.0 + 3.0 * x - y + 0.5 * x * y + x * x; };
    const ScalarField f = sample_scalar(g, poly);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            CHECK(f.at(i, j) == doctest::Approx(poly(g.x(i), g.y(j))).epsilon(1e-16));
}

TEST_CASE("perp rotates and squares to minus identity") {
    const Grid2D g = make_grid(16, 1.0);
    VectorField c(g);
    for (auto& v : c.f1().values()) v = 1.0;
    const VectorField pc = perp(c);
    for (double v : pc.f1().values()) CHECK(v == 0.0);
    for (double v : pc.f2().values()) CHECK(v == 1.0);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    VectorField f(g);
    for (auto& v : f.f1().values()) v = dist(rng);
    for (auto& v : f.f2().values()) v = dist(rng);
    const VectorField pp = perp(perp(f));
    for (std::size_t k = 0; k < f.f1().values().size(); ++k) {
        CHECK(pp.f1().values()[k] == -f.f1().values()[k]);
        CHECK(pp.f2().values()[k] == -f.f2().values()[k]);
    }

    // phantom 2 components swap with sign
    const VectorField ph = phantom2(g);
    const VectorField php = perp(ph);
    for (std::size_t k = 0; k < ph.f1().values().size(); ++k) {
        CHECK(php.f1().values()[k] == -ph.f2().values()[k]);
        CHECK(php.f2().values()[k] == ph.f1().values()[k]);
    }
}

TEST_CASE("field file round trip") {
    const Grid2D g = make_grid(9, 1.5);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    VectorField f(g);
    for (auto& v : f.f1().values()) v = dist(rng);
    for (auto& v : f.f2().values()) v = dist(rng);

    const std::string path = "test_field_roundtrip.vlf";
    write_field(path, f);
    CHECK(field_file_components(path) == 2);
    const VectorField back = read_vector_field(path);
    CHECK(back.grid() == g);
    for (std::size_t k = 0; k < f.f1().values().size(); ++k) {
        CHECK(back.f1().values()[k] == f.f1().values()[k]);
        CHECK(back.f2().values()[k] == f.f2().values()[k]);
    }
    CHECK_THROWS_AS(read_scalar_field(path), ConfigError);

    write_field(path, f.f1());
    const ScalarField s = read_scalar_field(path);
    for (std::size_t k = 0; k < s.values().size(); ++k)
        CHECK(s.values()[k] == f.f1().values()[k]);

    std::remove(path.c_str());
    CHECK_THROWS_AS(read_scalar_field("does_not_exist.vlf"), ConfigError);
}
