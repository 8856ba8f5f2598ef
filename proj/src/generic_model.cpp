#include "tractlab/generic_model.hpp"

#include <cmath>
#include <numbers>

namespace tractlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

void GenericConfig::validate() const {
    if (!(length_cm > 0.0)) throw InvalidInput("generic config: length_cm must be > 0");
    if (n_tubelets < 100) throw InvalidInput("generic config: n_tubelets must be >= 100");
}

void SampledAreaFunction::validate() const {
    if (areas.size() < 2) throw InvalidInput("area function: need at least 2 tubelets");
    if (!(tubelet_length_cm > 0.0)) throw InvalidInput("area function: tubelet length must be > 0");
    for (double a : areas) {
        if (!(a > 0.0) || !std::isfinite(a)) {
            throw InvalidInput("area function: areas must be finite and > 0");
        }
    }
}

FourierPair fourier_amplitudes(const CyclePoint& point) {
    FourierPair amps;
    amps.a1 = 2.0 * point.rho * std::cos(point.theta);
    amps.a2 = point.rho * (4.0 / 3.0) * std::sin(kPi / 3.0) * std::sin(point.theta);
    return amps;
}

double soft_rectify(double y) {
    return y < 1.0 ? std::exp(y - 1.0) : y;
}

SampledAreaFunction generic_area_from_amplitudes(const FourierPair& amps, const GenericConfig& cfg) {
    cfg.validate();
    const int n = cfg.n_tubelets;
    const double L = cfg.length_cm;

    SampledAreaFunction area;
    area.tubelet_length_cm = L / n;
    area.areas.resize(n);
    for (int i = 0; i < n; ++i) {
        const double x = (i + 0.5) * L / n;
        const double profile = 1.0 + amps.a1 * std::cos(kPi * x / L) + amps.a2 * std::cos(3.0 * kPi * x / L);
        area.areas[i] = soft_rectify(profile);
    }
    return area;
}

SampledAreaFunction generic_area_function(const CyclePoint& point, const GenericConfig& cfg) {
    return generic_area_from_amplitudes(fourier_amplitudes(point), cfg);
}

const std::vector<VowelTarget>& vowel_targets() {
    static const std::vector<VowelTarget> targets = {
        {"ɨ", "ix", 0.0},
        {"u", "u", kPi / 3.0},
        {"o", "o", kPi / 2.0},
        {"ɔ", "oc", 2.0 * kPi / 3.0},
        {"a", "a", kPi},
        {"ɛ", "eps", 4.0 * kPi / 3.0},
        {"e", "e", 3.0 * kPi / 2.0},
        {"i", "i", 5.0 * kPi / 3.0},
    };
    return targets;
}

}  // namespace tractlab
