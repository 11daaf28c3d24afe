#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "vline/diffops.hpp"
#include "vline/errors.hpp"
#include "vline/grid.hpp"
#include "vline/phantom.hpp"
#include "vline/png_io.hpp"

using namespace vline;

TEST_CASE("phantom 1 closed form and symmetry") {
    CHECK(phantom1_f1(0.5, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
    const Grid2D g = make_grid(160, 1.0);
    const VectorField f = phantom1(g);
    const int ic = g.index_of(0.0);
    CHECK(f.f1().at(ic, ic) ==
          doctest::Approx(1.0 + std::sin(M_PI * g.x(ic)) * std::cos(M_PI * g.y(ic)))
              .epsilon(1e-15));
    // f1(x, y) = f2(y, x)
    for (int i = 0; i < g.n; i += 7)
        for (int j = 0; j < g.n; j += 7) CHECK(f.f1().at(i, j) == f.f2().at(j, i));
}

TEST_CASE("phantom 2 bumps") {
    CHECK(phantom2_f1(0.15, 0.15) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    // zero outside the disc of radius sqrt(0.4) about (0.15, 0.15)
    CHECK(phantom2_f1(0.15 + std::sqrt(0.4) + 1e-9, 0.15) == 0.0);
    CHECK(phantom2_f1(0.9, -0.9) == 0.0);
    CHECK(phantom2_f2(0.0, 0.3) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

    // smooth vanishing at the support boundary: tiny one-sided differences
    const double r = std::sqrt(0.4);
    const double eps = 1e-3;
    const double inside = phantom2_f1(0.15 + r - eps, 0.15);
    const double outside = phantom2_f1(0.15 + r + eps, 0.15);
    CHECK(outside == 0.0);
    CHECK(std::abs(inside) < 1e-80);  // all derivatives vanish at the rim
    CHECK(std::abs(inside - outside) / (2.0 * eps) < 1e-70);

    // support separated from the boundary of the unit square
    const Grid2D g = make_grid(64, 1.0);
    const VectorField f = phantom2(g);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            if (g.center(i, j).norm() > 0.95) {
                CHECK(f.f1().at(i, j) == 0.0);
                CHECK(f.f2().at(i, j) == 0.0);
            }
        }
}

TEST_CASE("phantom 3 disc membership") {
    // inside disc 2 only
    CHECK(discs_value(phantom3_discs_f1(), 0.0, -0.1) == doctest::Approx(0.9));
    // (0.05, 0.25): inside discs 1 and 3; disc 2 misses it by ~0.0036
    CHECK(discs_value(phantom3_discs_f1(), 0.05, 0.25) == doctest::Approx(1.0));
    // far outside all discs
    CHECK(discs_value(phantom3_discs_f2(), -0.9, -0.9) == 0.0);

    const Grid2D g = make_grid(128, 1.0);
    const VectorField f = phantom3(g);
    for (int i = 0; i < g.n; i += 11)
        for (int j = 0; j < g.n; j += 11) {
            CHECK(f.f1().at(i, j) == discs_value(phantom3_discs_f1(), g.x(i), g.y(j)));
            CHECK(f.f2().at(i, j) == discs_value(phantom3_discs_f2(), g.x(i), g.y(j)));
        }
}

TEST_CASE("phantoms are deterministic and piecewise-consistent across resolutions") {
    const Grid2D g = make_grid(64, 1.0);
    const Grid2D g2 = make_grid(128, 1.0);
    const VectorField a = phantom3(g), b = phantom3(g);
    for (std::size_t k = 0; k < a.f1().values().size(); ++k)
        CHECK(a.f1().values()[k] == b.f1().values()[k]);

    // wherever the 2x2 fine block is uniform, the coarse sample agrees
    const VectorField fine = phantom3(g2);
    int checked = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const double q[4] = {fine.f1().at(2 * i, 2 * j), fine.f1().at(2 * i + 1, 2 * j),
                                 fine.f1().at(2 * i, 2 * j + 1),
                                 fine.f1().at(2 * i + 1, 2 * j + 1)};
            if (q[0] == q[1] && q[1] == q[2] && q[2] == q[3]) {
                CHECK(a.f1().at(i, j) == q[0]);
                ++checked;
            }
        }
    CHECK(checked > g.n * g.n / 2);
}

TEST_CASE("gradient fields from the analytic potential") {
    const Grid2D g = make_grid(96, 1.0);
    const Potential w = bump_potential();

    // radially symmetric W: perp gradient is tangent to circles
    const VectorField pg = perp_gradient_field(w, g);
    for (int i = 0; i < g.n; i += 3)
        for (int j = 0; j < g.n; j += 3) {
            const Vec2 p = g.center(i, j);
            const double radial = pg.f1().at(i, j) * p.x + pg.f2().at(i, j) * p.y;
            CHECK(std::abs(radial) < 1e-12);
        }

    // gradient of a constant potential vanishes
    Potential c;
    c.value = [](double, double) { return 3.5; };
    c.ddx = [](double, double) { return 0.0; };
    c.ddy = [](double, double) { return 0.0; };
    const VectorField gc = gradient_field(c, g);
    for (double v : gc.f1().values()) CHECK(v == 0.0);
    for (double v : gc.f2().values()) CHECK(v == 0.0);

    // discrete operators: div(perp grad W) = 0 and curl(grad W) = 0, O(h)
    const VectorField gr = gradient_field(w, g);
    const ScalarField cg = curl_field(gr);
    const ScalarField dp = div_field(pg);
    double max_curl = 0.0, max_div = 0.0;
    for (int i = 2; i < g.n - 2; ++i)
        for (int j = 2; j < g.n - 2; ++j) {
            max_curl = std::max(max_curl, std::abs(cg.at(i, j)));
            max_div = std::max(max_div, std::abs(dp.at(i, j)));
        }
    // W has steep interior gradients; C covers its third derivatives
    CHECK(max_curl <= 60.0 * g.spacing);
    CHECK(max_div <= 60.0 * g.spacing);

    // compact support inside a collar: zero outside radius sqrt(0.3)
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (g.center(i, j).norm() > 0.56) {
                CHECK(gr.f1().at(i, j) == 0.0);
                CHECK(pg.f2().at(i, j) == 0.0);
            }
}

TEST_CASE("truncate_to_disc") {
    const Grid2D g = make_grid(80, 1.0);
    const VectorField f = phantom1(g);

    const VectorField same = truncate_to_disc(f, std::sqrt(2.0) * g.half_extent + 0.01);
    for (std::size_t k = 0; k < f.f1().values().size(); ++k)
        CHECK(same.f1().values()[k] == f.f1().values()[k]);

    const VectorField cut = truncate_to_disc(f, 0.9);
    const int i95 = g.index_of(0.95), j0 = g.index_of(0.0);
    CHECK(cut.f1().at(i95, j0) == 0.0);
    CHECK(cut.f2().at(i95, j0) == 0.0);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (g.center(i, j).norm() < 0.9)
                CHECK(cut.f1().at(i, j) == f.f1().at(i, j));

    CHECK_THROWS_AS(truncate_to_disc(f, 0.0), ConfigError);
}

TEST_CASE("RGB image ingestion") {
    const int n = 32;
    ImageRGB red;
    red.width = red.height = n;
    red.pixels.assign(static_cast<std::size_t>(n) * n * 3, 0);
    for (int k = 0; k < n * n; ++k) red.pixels[3 * k] = 255;
    write_png_rgb("test_red.png", red);
    const VectorField fr = field_from_rgb_image("test_red.png");
    for (double v : fr.f1().values()) CHECK(v == 1.0);
    for (double v : fr.f2().values()) CHECK(v == 0.0);

    ImageRGB blue = red;
    for (int k = 0; k < n * n; ++k) {
        blue.pixels[3 * k] = 0;
        blue.pixels[3 * k + 2] = 255;
    }
    write_png_rgb("test_blue.png", blue);
    const VectorField fb = field_from_rgb_image("test_blue.png");
    for (double v : fb.f1().values()) CHECK(v == 0.0);
    for (double v : fb.f2().values()) CHECK(v == 0.0);

    // round trip within 8-bit quantization
    const Grid2D g = make_grid(n, 1.0);
    const ScalarField s1 = sample_scalar(
        g, [](double x, double y) { return 0.5 + 0.45 * std::sin(3 * x) * std::cos(2 * y); });
    const ScalarField s2 = sample_scalar(
        g, [](double x, double y) { return 0.5 + 0.45 * std::cos(4 * x * y); });
    const VectorField f(s1, s2);
    write_field_rgb_png("test_rt.png", f);
    const VectorField back = field_from_rgb_image("test_rt.png");
    for (std::size_t k = 0; k < f.f1().values().size(); ++k) {
        CHECK(std::abs(back.f1().values()[k] - f.f1().values()[k]) <= 1.0 / 255.0);
        CHECK(std::abs(back.f2().values()[k] - f.f2().values()[k]) <= 1.0 / 255.0);
    }

    // non-square images are rejected
    ImageRGB rect;
    rect.width = 16;
    rect.height = 8;
    rect.pixels.assign(16 * 8 * 3, 100);
    write_png_rgb("test_rect.png", rect);
    CHECK_THROWS_AS(field_from_rgb_image("test_rect.png"), ConfigError);
    CHECK_THROWS_AS(field_from_rgb_image("no_such_file.png"), ConfigError);

    for (const char* p : {"test_red.png", "test_blue.png", "test_rt.png", "test_rect.png"})
        std::remove(p);
}
