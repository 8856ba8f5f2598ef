#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tractlab/tube_models.hpp"

using namespace tractlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("drm coordination evaluates to the frozen reference columns") {
    const CoordinationTriple c = drm_coordination();

    const Vec at_u = eval_coordination(c, CyclePoint(1.0, kPi / 3.0));
    CHECK(at_u[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(at_u[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(at_u[2] == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(at_u[3] == doctest::Approx(-1.0).epsilon(1e-12));

    const Vec at_a = eval_coordination(c, CyclePoint(1.0, kPi));
    CHECK(at_a[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(at_a[1]) < 1e-12);
    CHECK(at_a[2] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(at_a[3] == doctest::Approx(3.0).epsilon(1e-12));

    const Vec neutral = eval_coordination(c, CyclePoint(0.0, 4.2));
    for (double p : neutral) CHECK(p == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("drm_reduce") {
    const DrmParams a = drm_reduce(1.0, 1.0);
    CHECK(a.p3 == 1.0);
    CHECK(a.p4 == 1.0);
    const DrmParams b = drm_reduce(3.0, 0.5);
    CHECK(b.p3 == 1.5);
    CHECK(b.p4 == -1.0);
    const DrmParams c = drm_reduce(-1.0, 0.0);
    CHECK(c.p3 == 2.0);
    CHECK(c.p4 == 3.0);
    CHECK_THROWS_AS(drm_reduce(std::nan(""), 0.0), InvalidInput);
}

TEST_CASE("drm area function layout") {
    const SampledAreaFunction uniform = drm_area_function(drm_reduce(1.0, 1.0));
    CHECK(uniform.areas.size() == 120);
    for (double a : uniform.areas) CHECK(a == 1.0);

    const SampledAreaFunction v = drm_area_function(drm_reduce(3.0, 0.5), 120, 17.5);
    // sections of {20, 40, 40, 20} tubelets; cuts at L/6, L/2, 5L/6
    CHECK(v.areas[0] == 3.0);
    CHECK(v.areas[19] == 3.0);
    CHECK(v.areas[20] == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(v.areas[59] == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(v.areas[60] == 1.5);
    CHECK(v.areas[99] == 1.5);
    CHECK(v.areas[100] == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(v.areas[119] == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(drm_area_function(DrmParams{}, 121, 17.5), InvalidInput);
}

TEST_CASE("drm coordination/reduction equivalence and internal antisymmetry") {
    const CoordinationTriple c = drm_coordination();
    for (int g = 0; g < 96; ++g) {
        const CyclePoint pt(1.0, 2.0 * kPi * g / 96.0);
        const Vec p = eval_coordination(c, pt);
        const DrmParams reduced = drm_reduce(p[0], p[1]);
        CHECK(std::abs(p[2] - reduced.p3) < 1e-12);
        CHECK(std::abs(p[3] - reduced.p4) < 1e-12);
        // pre-rectification mirror: value(s) = 2 - value(5-s)
        CHECK(std::abs(p[0] + p[3] - 2.0) < 1e-12);
        CHECK(std::abs(p[1] + p[2] - 2.0) < 1e-12);
    }
}

TEST_CASE("drm boundary match with the generic model") {
    // At the anchor vowels, section values equal the unrectified generic
    // profile at x in {0, L/3, 2L/3, L}.
    const CoordinationTriple c = drm_coordination();
    for (double theta : {kPi / 3.0, kPi, 5.0 * kPi / 3.0}) {
        const Vec p = eval_coordination(c, CyclePoint(1.0, theta));
        const FourierPair amps = fourier_amplitudes(CyclePoint(1.0, theta));
        for (int s = 0; s < 4; ++s) {
            const double x_over_l = std::vector<double>{0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0}[s];
            const double profile = 1.0 + amps.a1 * std::cos(kPi * x_over_l) +
                                   amps.a2 * std::cos(3.0 * kPi * x_over_l);
            CHECK(p[s] == doctest::Approx(profile).epsilon(1e-9));
        }
    }
}

TEST_CASE("fant coordination rows") {
    FantGeometry geom;
    const CoordinationTriple c = fant_coordination(geom);

    // Xc maximal for [i]
    const Vec at_i = eval_coordination(c, CyclePoint(1.0, 5.0 * kPi / 3.0));
    CHECK(at_i[0] == doctest::Approx(126.0).epsilon(1e-12));

    // L maximal for [u]
    const Vec at_u = eval_coordination(c, CyclePoint(1.0, kPi / 3.0));
    CHECK(at_u[3] == doctest::Approx(19.0).epsilon(1e-12));
    CHECK(at_u[0] == doctest::Approx(72.0).epsilon(1e-12));
    CHECK(at_u[1] == doctest::Approx(-2.5).epsilon(1e-12));
    CHECK(at_u[2] == doctest::Approx(-0.5).epsilon(1e-12));

    // Ac for [a]: -1.5 + 2 = 0.5 pre-rectification
    const Vec at_a = eval_coordination(c, CyclePoint(1.0, kPi));
    CHECK(at_a[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(soft_rectify(at_a[1]) == doctest::Approx(0.606531).epsilon(1e-6));
}

TEST_CASE("fant reconstruction") {
    FantGeometry geom;

    SUBCASE("neutral layout") {
        const FantParams p = fant_params_at(geom, CyclePoint(0.0, 0.0));
        CHECK(p.xc == doctest::Approx(90.0));
        CHECK(p.ac == doctest::Approx(-1.5));
        CHECK(p.al == doctest::Approx(0.5));
        CHECK(p.total_length_cm == doctest::Approx(17.5));

        const SampledAreaFunction area = fant_area_function(p, geom);
        REQUIRE(area.areas.size() == 200);
        CHECK(area.total_length_cm() == doctest::Approx(17.5).epsilon(1e-12));
        // constriction block [60, 120), lips [180, 200)
        CHECK(area.areas[59] == 4.0);
        CHECK(area.areas[60] == doctest::Approx(std::exp(-2.5)).epsilon(1e-12));
        CHECK(area.areas[119] == doctest::Approx(std::exp(-2.5)).epsilon(1e-12));
        CHECK(area.areas[120] == 4.0);
        CHECK(area.areas[179] == 4.0);
        CHECK(area.areas[180] == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
        CHECK(area.areas[199] == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    }

    SUBCASE("[u] layout") {
        const FantParams p = fant_params_at(geom, CyclePoint(1.0, kPi / 3.0));
        const SampledAreaFunction area = fant_area_function(p, geom);
        CHECK(area.total_length_cm() == doctest::Approx(19.0).epsilon(1e-12));
        CHECK(area.areas[41] == 4.0);
        CHECK(area.areas[42] == doctest::Approx(std::exp(-3.5)).epsilon(1e-12));
        CHECK(area.areas[101] == doctest::Approx(std::exp(-3.5)).epsilon(1e-12));
        CHECK(area.areas[102] == 4.0);
        CHECK(area.areas[199] == doctest::Approx(std::exp(-1.5)).epsilon(1e-12));
    }

    SUBCASE("constriction stays inside the sliding region over the cycle") {
        for (int g = 0; g < 96; ++g) {
            const FantParams p = fant_params_at(geom, CyclePoint(1.0, 2.0 * kPi * g / 96.0));
            const SampledAreaFunction area = fant_area_function(p, geom);
            CHECK(area.areas.size() == 200);
            for (double a : area.areas) CHECK(a > 0.0);
        }
    }

    SUBCASE("out-of-range constriction rejected") {
        FantParams p = fant_params_at(geom, CyclePoint(0.0, 0.0));
        p.xc = 500.0;
        CHECK_THROWS_AS(fant_area_function(p, geom), InvalidInput);
    }
}
