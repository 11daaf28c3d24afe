#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "vline/errors.hpp"
#include "vline/eval.hpp"
#include "vline/grid.hpp"
#include "vline/phantom.hpp"

using namespace vline;

TEST_CASE("add_noise: exact level, determinism, edge cases") {
    const Grid2D g = make_grid(64, 1.0);
    const ScalarField f = sample_scalar(g, phantom2_f1);

    NoiseSpec spec;
    spec.level = 0.0;
    spec.seed = 11;
    const ScalarField same = add_noise(f, spec);
    for (std::size_t k = 0; k < f.values().size(); ++k)
        CHECK(same.values()[k] == f.values()[k]);

    spec.level = 0.05;
    const ScalarField noisy = add_noise(f, spec);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < f.values().size(); ++k) {
        const double d = noisy.values()[k] - f.values()[k];
        num += d * d;
        den += f.values()[k] * f.values()[k];
    }
    CHECK(std::sqrt(num / den) == doctest::Approx(0.05).epsilon(1e-12));

    const ScalarField again = add_noise(f, spec);
    for (std::size_t k = 0; k < noisy.values().size(); ++k)
        CHECK(again.values()[k] == noisy.values()[k]);

    NoiseSpec other = spec;
    other.seed = 12;
    const ScalarField different = add_noise(f, other);
    int diffs = 0;
    for (std::size_t k = 0; k < noisy.values().size(); ++k)
        diffs += different.values()[k] != noisy.values()[k];
    CHECK(diffs > static_cast<int>(f.values().size()) / 2);

    // uniform model also hits the level exactly
    NoiseSpec uni = spec;
    uni.model = NoiseSpec::Model::UniformL2;
    const ScalarField un = add_noise(f, uni);
    num = 0.0;
    for (std::size_t k = 0; k < f.values().size(); ++k) {
        const double d = un.values()[k] - f.values()[k];
        num += d * d;
    }
    CHECK(std::sqrt(num / den) == doctest::Approx(0.05).epsilon(1e-12));

    // zero data cannot be scaled: unchanged plus warning flag
    bool warned = false;
    const ScalarField z = add_noise(ScalarField(g), spec, &warned);
    CHECK(warned);
    for (double v : z.values()) CHECK(v == 0.0);

    NoiseSpec bad;
    bad.level = -0.1;
    CHECK_THROWS_AS(add_noise(f, bad), ConfigError);
}

TEST_CASE("rel_l2 and max_err") {
    const Grid2D g = make_grid(80, 1.0);
    const ScalarField b = sample_scalar(g, phantom2_f2);
    CHECK(rel_l2(b, b, 0.8) == 0.0);
    CHECK(max_err(b, b, 0.8) == 0.0);

    ScalarField twice(g);
    for (std::size_t k = 0; k < b.values().size(); ++k)
        twice.values()[k] = 2.0 * b.values()[k];
    CHECK(rel_l2(twice, b, 0.8) == doctest::Approx(1.0).epsilon(1e-12));

    // positively homogeneous in the difference
    ScalarField b_plus(g), b_plus2(g);
    const ScalarField d = sample_scalar(g, [](double x, double y) { return 0.1 * x * y; });
    for (std::size_t k = 0; k < b.values().size(); ++k) {
        b_plus.values()[k] = b.values()[k] + d.values()[k];
        b_plus2.values()[k] = b.values()[k] + 3.0 * d.values()[k];
    }
    CHECK(rel_l2(b_plus2, b, 0.8) == doctest::Approx(3.0 * rel_l2(b_plus, b, 0.8)).epsilon(1e-12));

    // zero reference: absolute norm with flag
    bool zero_ref = false;
    const double abs_norm = rel_l2(b, ScalarField(g), 0.8, &zero_ref);
    CHECK(zero_ref);
    CHECK(abs_norm > 0.0);

    // inset disc excludes the boundary and matches the area estimate
    const int count = inset_pixel_count(g, 0.8);
    const double area_pixels = M_PI * 0.8 * 0.8 / (g.spacing * g.spacing);
    CHECK(std::abs(count - area_pixels) / area_pixels < 0.01);
    const int all = inset_pixel_count(g, 10.0);
    CHECK(all == g.n * g.n);
    // no pixel of the 0.8-inset lies on the outermost ring
    CHECK(count < g.n * g.n - 4 * (g.n - 1));
}

TEST_CASE("report serialization round trip") {
    ReconReport r;
    r.pipeline = "3";
    r.geometry = "u=45;v=135";
    r.n = 256;
    r.half_extent = 1.0;
    r.noise_level = 0.05;
    r.seed = 42;
    r.component_rel_l2 = {0.11, 0.13};
    r.component_max_err = {0.5, 0.6};
    r.inset_radius = 0.8;
    r.wall_seconds = 12.5;
    r.artifacts = {"out/recon.vlf", "out/recon_f1.png"};
    r.extras["png_bounds.recon_f1"] = "-0.1 1.2";

    write_report("test_report.txt", r);
    const ReconReport back = read_report("test_report.txt");
    CHECK(back.pipeline == r.pipeline);
    CHECK(back.geometry == r.geometry);
    CHECK(back.n == r.n);
    CHECK(back.noise_level == r.noise_level);
    CHECK(back.seed == r.seed);
    REQUIRE(back.component_rel_l2.size() == 2);
    CHECK(back.component_rel_l2[0] == r.component_rel_l2[0]);
    CHECK(back.component_rel_l2[1] == r.component_rel_l2[1]);
    CHECK(back.inset_radius == r.inset_radius);
    CHECK(back.artifacts == r.artifacts);
    CHECK(back.extras.at("png_bounds.recon_f1") == "-0.1 1.2");
    std::remove("test_report.txt");

    CHECK_THROWS_AS(read_report("missing_report.txt"), ConfigError);
}
