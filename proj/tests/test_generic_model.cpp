#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tractlab/generic_model.hpp"

using namespace tractlab;

namespace {
constexpr double kPi = std::numbers::pi;
const double kAlpha = (4.0 / 3.0) * std::sin(kPi / 3.0);
}  // namespace

TEST_CASE("fourier_amplitudes at the named angles") {
    const FourierPair u = fourier_amplitudes(CyclePoint(1.0, kPi / 3.0));
    CHECK(u.a1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(u.a2 == doctest::Approx(1.0).epsilon(1e-12));

    const FourierPair o = fourier_amplitudes(CyclePoint(1.0, kPi / 2.0));
    CHECK(std::abs(o.a1) < 1e-12);
    CHECK(o.a2 == doctest::Approx(kAlpha).epsilon(1e-12));
    CHECK(kAlpha == doctest::Approx(1.154701).epsilon(1e-6));

    const FourierPair center = fourier_amplitudes(CyclePoint(0.0, 2.7));
    CHECK(center.a1 == 0.0);
    CHECK(center.a2 == 0.0);
}

TEST_CASE("fourier_amplitudes traces an ellipse") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> theta_dist(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> rho_dist(0.1, 1.0);
    for (int t = 0; t < 200; ++t) {
        const double rho = rho_dist(rng);
        const FourierPair p = fourier_amplitudes(CyclePoint(rho, theta_dist(rng)));
        const double e = std::pow(p.a1 / (2.0 * rho), 2) + std::pow(p.a2 / (rho * kAlpha), 2);
        CHECK(std::abs(e - 1.0) < 1e-12);
    }
}

TEST_CASE("soft_rectify branches and shape") {
    CHECK(soft_rectify(2.0) == 2.0);
    CHECK(soft_rectify(1.0) == 1.0);
    CHECK(soft_rectify(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

    // monotone and positive
    double prev = soft_rectify(-6.0);
    CHECK(prev > 0.0);
    for (double y = -5.9; y < 4.0; y += 0.1) {
        const double cur = soft_rectify(y);
        CHECK(cur > prev);
        prev = cur;
    }
    // identity above 1, below 1 stays in (0,1)
    for (double y = 1.0; y < 5.0; y += 0.3) CHECK(soft_rectify(y) == y);
    for (double y = 0.99; y > -3.0; y -= 0.17) {
        CHECK(soft_rectify(y) > 0.0);
        CHECK(soft_rectify(y) < 1.0);
    }
}

TEST_CASE("generic area function") {
    GenericConfig cfg;

    SUBCASE("neutral tube is uniform unit area") {
        const SampledAreaFunction area = generic_area_function(CyclePoint(0.0, 1.3), cfg);
        CHECK(area.areas.size() == 120);
        CHECK(area.tubelet_length_cm == doctest::Approx(17.5 / 120.0));
        for (double a : area.areas) CHECK(a == 1.0);
    }

    SUBCASE("[a] endpoints") {
        // (a1,a2) = (-2,0): profile 1 - 2 cos(pi x/L), expif(-1)=exp(-2) at x=0, 3 at x=L
        cfg.n_tubelets = 2000;  // midpoint samples close to the endpoints
        const SampledAreaFunction area = generic_area_function(CyclePoint(1.0, kPi), cfg);
        CHECK(area.areas.front() == doctest::Approx(std::exp(-2.0)).epsilon(1e-3));
        CHECK(area.areas.back() == doctest::Approx(3.0).epsilon(1e-3));
    }

    SUBCASE("[u] glottis end") {
        cfg.n_tubelets = 2000;
        const SampledAreaFunction area = generic_area_function(CyclePoint(1.0, kPi / 3.0), cfg);
        CHECK(area.areas.front() == doctest::Approx(3.0).epsilon(1e-3));
    }

    SUBCASE("all areas strictly positive over the cycle") {
        for (int g = 0; g < 48; ++g) {
            const SampledAreaFunction area =
                generic_area_function(CyclePoint(1.0, 2.0 * kPi * g / 48.0), cfg);
            for (double a : area.areas) CHECK(a > 0.0);
        }
    }

    SUBCASE("pre-rectification antisymmetry of the amplitudes") {
        for (int g = 0; g < 24; ++g) {
            const double theta = 2.0 * kPi * g / 24.0;
            const FourierPair p = fourier_amplitudes(CyclePoint(1.0, theta));
            const FourierPair q = fourier_amplitudes(CyclePoint(1.0, theta + kPi));
            CHECK(std::abs(p.a1 + q.a1) < 1e-12);
            CHECK(std::abs(p.a2 + q.a2) < 1e-12);
        }
    }
}

TEST_CASE("vowel targets") {
    const auto& targets = vowel_targets();
    REQUIRE(targets.size() == 8);
    CHECK(targets[0].label == "ɨ");
    CHECK(targets[0].theta == 0.0);
    CHECK(targets[4].label == "a");
    CHECK(targets[4].theta == doctest::Approx(kPi));
    CHECK(targets[6].label == "e");
    CHECK(targets[6].theta == doctest::Approx(3.0 * kPi / 2.0));
    CHECK(targets[7].label == "i");
    CHECK(targets[7].theta == doctest::Approx(5.0 * kPi / 3.0));

    // [a] -> (-2, 0); [i] -> (1, -1); [e] -> (0, -alpha)
    const FourierPair a = fourier_amplitudes(CyclePoint(1.0, targets[4].theta));
    CHECK(a.a1 == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(std::abs(a.a2) < 1e-12);
    const FourierPair i = fourier_amplitudes(CyclePoint(1.0, targets[7].theta));
    CHECK(i.a1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(i.a2 == doctest::Approx(-1.0).epsilon(1e-12));
    const FourierPair e = fourier_amplitudes(CyclePoint(1.0, targets[6].theta));
    CHECK(std::abs(e.a1) < 1e-12);
    CHECK(e.a2 == doctest::Approx(-kAlpha).epsilon(1e-12));
}

TEST_CASE("generic config validation") {
    GenericConfig cfg;
    cfg.n_tubelets = 50;
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
    cfg.n_tubelets = 120;
    cfg.length_cm = 0.0;
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
}
