#ifndef TRACTLAB_GENERIC_MODEL_HPP
#define TRACTLAB_GENERIC_MODEL_HPP

#include <string>
#include <vector>

#include "tractlab/mixing.hpp"
#include "tractlab/types.hpp"

namespace tractlab {

struct GenericConfig {
    double length_cm = 17.5;
    int n_tubelets = 120;

    void validate() const;
};

// Amplitudes of cos(pi x/L) and cos(3 pi x/L) in the pre-rectification profile.
struct FourierPair {
    double a1 = 0.0;
    double a2 = 0.0;
};

// Piecewise-constant tube description, index 0 = glottis end, last = lip end.
struct SampledAreaFunction {
    double tubelet_length_cm = 0.0;
    std::vector<double> areas;  // cm^2, strictly positive

    std::size_t size() const { return areas.size(); }
    double total_length_cm() const { return tubelet_length_cm * static_cast<double>(areas.size()); }
    void validate() const;
};

struct VowelTarget {
    std::string label;  // IPA
    std::string slug;   // ASCII-safe file name stem
    double theta;
};

// (a1, a2) = (2 rho cos theta, rho (4/3) sin(pi/3) sin theta).
FourierPair fourier_amplitudes(const CyclePoint& point);

// C1 rectifier: identity for y >= 1, exp(y-1) below. Always positive, monotone.
double soft_rectify(double y);

// Rectified profile 1 + a1 cos(pi x/L) + a2 cos(3 pi x/L), midpoint-sampled at
// x_i = (i - 1/2) L/n.
SampledAreaFunction generic_area_from_amplitudes(const FourierPair& amps, const GenericConfig& cfg);
SampledAreaFunction generic_area_function(const CyclePoint& point, const GenericConfig& cfg);

// The 8 characteristic vowels in cycle order, starting at theta = 0.
const std::vector<VowelTarget>& vowel_targets();

}  // namespace tractlab

#endif
