#ifndef TRACTLAB_ACOUSTICS_HPP
#define TRACTLAB_ACOUSTICS_HPP

#include <complex>
#include <optional>
#include <vector>

#include "tractlab/generic_model.hpp"
#include "tractlab/types.hpp"

namespace tractlab {

enum class LossModel { lossless, simple_lossy };
enum class ModelId { generic, drm, fant };

struct AcousticConstants {
    double sound_speed_c = 35000.0;  // cm/s
    double air_density = 1.14e-3;    // g/cm^3
    LossModel loss_model = LossModel::lossless;
    double loss_coefficient = 0.007;
    bool radiation_load = true;  // lossy mode only; lossless always terminates in zero load

    void validate() const;
};

struct FrequencyGrid {
    double f_min_hz = 50.0;
    double f_max_hz = 4000.0;
    double step_hz = 10.0;

    std::vector<double> frequencies() const;
    void validate() const;
};

// Volume-velocity transfer ratio U_lips/U_glottis on an ascending uniform grid.
struct TransferSpectrum {
    std::vector<double> frequencies;
    std::vector<std::complex<double>> values;
};

struct FormantSet {
    double f1 = 0.0;
    double f2 = 0.0;
    std::optional<double> f3;
};

// Chain-matrix evaluation glottis->lips. Lossless tubelets contribute
//   [cos(kd), i Zc sin(kd); i sin(kd)/Zc, cos(kd)],  k = 2 pi f / c, Zc = rho c / S.
// Termination: ideal open end (zero load) when lossless, piston-style radiation
// load otherwise. H = 1/(C Z_load + D).
TransferSpectrum transfer_spectrum(const SampledAreaFunction& area, const FrequencyGrid& grid,
                                   const AcousticConstants& constants);

// The `count` (2 or 3) lowest local maxima of |H|, each refined by three-point
// parabolic interpolation in log magnitude. Throws FormantExtractionError when
// fewer peaks exist.
FormantSet find_formants(const TransferSpectrum& spectrum, int count = 2);

// Formants of the model's rho=0 configuration under that model's loss setting
// (lossless for generic/DRM, lossy for Fant). Default geometries.
FormantSet neutral_reference(ModelId model, const AcousticConstants& constants = {},
                             const FrequencyGrid& grid = {});

}  // namespace tractlab

#endif
