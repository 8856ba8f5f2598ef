#include "tractlab/mixing.hpp"

#include <cmath>
#include <numbers>

namespace tractlab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(const Vec& v, const char* name) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw InvalidInput(std::string(name) + " contains a non-finite entry");
        }
    }
}

}  // namespace

void ComponentTriple::validate() const {
    if (i.empty() || i.size() != j.size() || i.size() != k.size()) {
        throw InvalidInput("component triple: i, j, k must share a dimension >= 1");
    }
    require_finite(i, "i");
    require_finite(j, "j");
    require_finite(k, "k");
}

void CoordinationTriple::validate() const {
    if (omega.empty() || omega.size() != psi1.size() || omega.size() != psi2.size()) {
        throw InvalidInput("coordination triple: omega, psi1, psi2 must share a dimension >= 1");
    }
    require_finite(omega, "omega");
    require_finite(psi1, "psi1");
    require_finite(psi2, "psi2");
}

double normalize_angle(double theta) {
    double t = std::fmod(theta, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    return t;
}

CyclePoint::CyclePoint(double rho_, double theta_) : rho(rho_), theta(normalize_angle(theta_)) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw InvalidInput("cycle point: rho must lie in [0,1]");
    }
}

Vec mix_threephase(const ComponentTriple& seed, double theta) {
    seed.validate();
    const double t = normalize_angle(theta);
    const double ci = std::cos(t - kPi / 3.0);
    const double cj = std::cos(t - kPi);
    const double ck = std::cos(t - 5.0 * kPi / 3.0);

    const std::size_t n = seed.dimension();
    Vec out(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double omega = (seed.i[m] + seed.j[m] + seed.k[m]) / 3.0;
        out[m] = omega + (2.0 / 3.0) * (seed.i[m] * ci + seed.j[m] * cj + seed.k[m] * ck);
    }
    return out;
}

CoordinationTriple to_coordination(const ComponentTriple& seed) {
    seed.validate();
    const std::size_t n = seed.dimension();
    const double s3 = std::sin(kPi / 3.0);

    CoordinationTriple coord;
    coord.omega.resize(n);
    coord.psi1.resize(n);
    coord.psi2.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double omega = (seed.i[m] + seed.j[m] + seed.k[m]) / 3.0;
        const double x = (2.0 / 3.0) * (0.5 * (seed.i[m] + seed.k[m]) - seed.j[m]);
        const double y = (2.0 / 3.0) * (seed.i[m] - seed.k[m]) * s3;
        const double amp = std::hypot(x, y);
        coord.omega[m] = omega;
        coord.psi1[m] = amp;
        coord.psi2[m] = amp > 0.0 ? std::atan2(y, x) : 0.0;
    }
    return coord;
}

Vec eval_coordination(const CoordinationTriple& coord, const CyclePoint& point) {
    coord.validate();
    const std::size_t n = coord.dimension();
    Vec out(n);
    for (std::size_t m = 0; m < n; ++m) {
        out[m] = coord.omega[m] +
                 point.rho * coord.psi1[m] * std::cos(coord.psi2[m] - point.theta);
    }
    return out;
}

ComponentTriple components_from_coordination(const CoordinationTriple& coord) {
    ComponentTriple seed;
    seed.i = eval_coordination(coord, CyclePoint(1.0, kPi / 3.0));
    seed.j = eval_coordination(coord, CyclePoint(1.0, kPi));
    seed.k = eval_coordination(coord, CyclePoint(1.0, 5.0 * kPi / 3.0));
    return seed;
}

}  // namespace tractlab
