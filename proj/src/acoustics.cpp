#include "tractlab/acoustics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tractlab/tube_models.hpp"

namespace tractlab {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

struct ChainMatrix {
    Complex a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

    void multiply_right(Complex ta, Complex tb, Complex tc, Complex td) {
        const Complex na = a * ta + b * tc;
        const Complex nb = a * tb + b * td;
        const Complex nc = c * ta + d * tc;
        const Complex nd = c * tb + d * td;
        a = na; b = nb; c = nc; d = nd;
    }
};

}  // namespace

void AcousticConstants::validate() const {
    if (!(sound_speed_c > 0.0)) throw InvalidInput("acoustic constants: sound speed must be > 0");
    if (!(air_density > 0.0)) throw InvalidInput("acoustic constants: air density must be > 0");
    if (!(loss_coefficient >= 0.0)) throw InvalidInput("acoustic constants: loss coefficient must be >= 0");
}

void FrequencyGrid::validate() const {
    if (!(step_hz > 0.0)) throw InvalidInput("frequency grid: step must be > 0");
    if (!(f_min_hz > 0.0) || !(f_max_hz > f_min_hz) || f_max_hz > 6000.0) {
        throw InvalidInput("frequency grid: range must lie within (0, 6000] Hz");
    }
}

std::vector<double> FrequencyGrid::frequencies() const {
    validate();
    std::vector<double> f;
    const int count = static_cast<int>(std::floor((f_max_hz - f_min_hz) / step_hz + 0.5)) + 1;
    f.reserve(count);
    for (int i = 0; i < count; ++i) f.push_back(f_min_hz + i * step_hz);
    return f;
}

TransferSpectrum transfer_spectrum(const SampledAreaFunction& area, const FrequencyGrid& grid,
                                   const AcousticConstants& constants) {
    area.validate();
    constants.validate();

    const double c = constants.sound_speed_c;
    const double rho_air = constants.air_density;
    const double d = area.tubelet_length_cm;
    const bool lossy = constants.loss_model == LossModel::simple_lossy;

    TransferSpectrum spectrum;
    spectrum.frequencies = grid.frequencies();
    spectrum.values.resize(spectrum.frequencies.size());

    for (std::size_t fi = 0; fi < spectrum.frequencies.size(); ++fi) {
        const double f = spectrum.frequencies[fi];
        const double k0 = 2.0 * kPi * f / c;

        ChainMatrix m;
        for (double s : area.areas) {
            Complex k(k0, 0.0);
            if (lossy) {
                // Viscothermal-style, area-dependent attenuation of the wavenumber.
                k *= Complex(1.0, -constants.loss_coefficient / std::sqrt(s) * std::sqrt(f / 1000.0));
            }
            const Complex kd = k * d;
            const Complex zc(rho_air * c / s, 0.0);
            const Complex ck = std::cos(kd);
            const Complex sk = std::sin(kd);
            const Complex iu(0.0, 1.0);
            m.multiply_right(ck, iu * zc * sk, iu * sk / zc, ck);
        }

        Complex z_load(0.0, 0.0);
        if (lossy && constants.radiation_load) {
            // Piston-style radiation load at the lips.
            const double s_lips = area.areas.back();
            const double a_rad = std::sqrt(s_lips / kPi);
            const double ka = k0 * a_rad;
            z_load = (rho_air * c / s_lips) * Complex(0.25 * ka * ka, 0.613 * ka);
        }

        Complex den = m.c * z_load + m.d;
        if (std::abs(den) < 1e-12) {
            // Keep |H| finite at grid points that land on a pole.
            den = den == Complex(0.0, 0.0) ? Complex(1e-12, 0.0) : den / std::abs(den) * 1e-12;
        }
        spectrum.values[fi] = 1.0 / den;
    }
    return spectrum;
}

FormantSet find_formants(const TransferSpectrum& spectrum, int count) {
    if (count != 2 && count != 3) throw InvalidInput("find_formants: count must be 2 or 3");
    const std::size_t n = spectrum.frequencies.size();
    if (n != spectrum.values.size() || n < 3) {
        throw InvalidInput("find_formants: malformed spectrum");
    }

    std::vector<double> mag(n);
    for (std::size_t i = 0; i < n; ++i) mag[i] = std::abs(spectrum.values[i]);

    std::vector<double> peaks;
    for (std::size_t i = 1; i + 1 < n && static_cast<int>(peaks.size()) < count; ++i) {
        if (mag[i] > mag[i - 1] && mag[i] >= mag[i + 1]) {
            const double y0 = std::log(mag[i - 1]);
            const double y1 = std::log(mag[i]);
            const double y2 = std::log(mag[i + 1]);
            const double denom = y0 - 2.0 * y1 + y2;
            double delta = 0.0;
            if (denom < 0.0) delta = 0.5 * (y0 - y2) / denom;
            delta = std::clamp(delta, -0.5, 0.5);
            const double step = spectrum.frequencies[1] - spectrum.frequencies[0];
            peaks.push_back(spectrum.frequencies[i] + delta * step);
        }
    }

    if (static_cast<int>(peaks.size()) < count) {
        throw FormantExtractionError("found fewer spectral peaks than requested",
                                     static_cast<int>(peaks.size()));
    }
    FormantSet formants;
    formants.f1 = peaks[0];
    formants.f2 = peaks[1];
    if (count == 3) formants.f3 = peaks[2];
    return formants;
}

FormantSet neutral_reference(ModelId model, const AcousticConstants& constants,
                             const FrequencyGrid& grid) {
    AcousticConstants cst = constants;
    SampledAreaFunction area;
    switch (model) {
        case ModelId::generic:
            cst.loss_model = LossModel::lossless;
            area = generic_area_function(CyclePoint(0.0, 0.0), GenericConfig{});
            break;
        case ModelId::drm:
            cst.loss_model = LossModel::lossless;
            area = drm_area_function(drm_reduce(1.0, 1.0));
            break;
        case ModelId::fant: {
            cst.loss_model = LossModel::simple_lossy;
            FantGeometry geom;
            area = fant_area_function(fant_params_at(geom, CyclePoint(0.0, 0.0)), geom);
            break;
        }
    }
    return find_formants(transfer_spectrum(area, grid, cst), 2);
}

}  // namespace tractlab
