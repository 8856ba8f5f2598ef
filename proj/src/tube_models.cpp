#include "tractlab/tube_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tractlab {

namespace {

constexpr double kPi = std::numbers::pi;

// The Xc amplitude is fixed as 0.3 (Lc - l), independent of l itself.
constexpr double kXcAmplitudeFactor = 0.3;

long round_half_up(double x) {
    return static_cast<long>(std::floor(x + 0.5));
}

}  // namespace

void FantGeometry::validate() const {
    if (n < 100) throw InvalidInput("fant geometry: n must be >= 100");
    if (!(constriction_fraction > 0.0 && constriction_fraction < region_fraction &&
          region_fraction <= 1.0)) {
        throw InvalidInput("fant geometry: need 0 < l < Lc <= 1");
    }
    if (!(mean_length_cm > 0.0) || !(length_amplitude_cm >= 0.0) ||
        !(mean_length_cm > length_amplitude_cm)) {
        throw InvalidInput("fant geometry: invalid length parameters");
    }
}

CoordinationTriple drm_coordination() {
    const double psi2_a = std::atan((2.0 / 3.0) * std::sin(kPi / 3.0));  // = pi/6
    const double psi1_a = 2.0 / std::cos(psi2_a);                        // = 4/sqrt(3)
    const double psi2_b = std::atan(-(4.0 / 3.0) * std::sin(kPi / 3.0));
    const double psi1_b = 1.0 / std::cos(psi2_b);

    CoordinationTriple coord;
    coord.omega = {1.0, 1.0, 1.0, 1.0};
    coord.psi1 = {psi1_a, psi1_b, -psi1_b, -psi1_a};
    coord.psi2 = {psi2_a, psi2_b, psi2_b, psi2_a};
    return coord;
}

DrmParams drm_reduce(double p1, double p2) {
    if (!std::isfinite(p1) || !std::isfinite(p2)) {
        throw InvalidInput("drm_reduce: inputs must be finite");
    }
    return {p1, p2, 2.0 - p2, 2.0 - p1};
}

SampledAreaFunction drm_area_function(const DrmParams& params, int n, double length_cm) {
    if (n < 6 || n % 6 != 0) throw InvalidInput("drm area function: n must be divisible by 6");
    if (!(length_cm > 0.0)) throw InvalidInput("drm area function: length must be > 0");

    SampledAreaFunction area;
    area.tubelet_length_cm = length_cm / n;
    area.areas.resize(n);
    const int s1 = n / 6, s2 = n / 2, s3 = 5 * n / 6;
    for (int i = 0; i < n; ++i) {
        double pre;
        if (i < s1) pre = params.p1;
        else if (i < s2) pre = params.p2;
        else if (i < s3) pre = params.p3;
        else pre = params.p4;
        area.areas[i] = soft_rectify(pre);
    }
    return area;
}

CoordinationTriple fant_coordination(const FantGeometry& geom) {
    geom.validate();
    const double n = static_cast<double>(geom.n);
    const double A = geom.unit_area;

    CoordinationTriple coord;
    coord.omega = {geom.region_fraction * n / 2.0, -1.5 * A, A / 2.0, geom.mean_length_cm};
    coord.psi1 = {kXcAmplitudeFactor * (geom.region_fraction - geom.constriction_fraction) * n,
                  2.0 * A, -A, geom.length_amplitude_cm};
    coord.psi2 = {5.0 * kPi / 3.0, kPi, kPi / 3.0, kPi / 3.0};
    return coord;
}

FantParams fant_params_at(const FantGeometry& geom, const CyclePoint& point) {
    const Vec p = eval_coordination(fant_coordination(geom), point);
    return {p[0], p[1], p[2], p[3]};
}

SampledAreaFunction fant_area_function(const FantParams& params, const FantGeometry& geom) {
    geom.validate();
    if (!(params.total_length_cm > 0.0)) {
        throw InvalidInput("fant area function: total length must be > 0");
    }
    const int n = geom.n;
    const long region_end = round_half_up(geom.region_fraction * n);
    const long lip_count = round_half_up((1.0 - geom.region_fraction) * n);
    const long block = round_half_up(geom.constriction_fraction * n);
    const long center = round_half_up(params.xc);

    const long c_begin = std::max(center - block / 2, 0L);
    const long c_end = std::min(center - block / 2 + block, region_end);
    if (c_begin >= c_end) {
        throw InvalidInput("fant area function: constriction lies outside the sliding region");
    }

    std::vector<double> pre(n, geom.tube_area);
    for (long i = std::max(0L, static_cast<long>(n) - lip_count); i < n; ++i) pre[i] = params.al;
    for (long i = c_begin; i < c_end; ++i) pre[i] = params.ac;

    SampledAreaFunction area;
    area.tubelet_length_cm = params.total_length_cm / n;
    area.areas.resize(n);
    for (int i = 0; i < n; ++i) area.areas[i] = soft_rectify(pre[i]);
    return area;
}

}  // namespace tractlab
