#ifndef TRACTLAB_TUBE_MODELS_HPP
#define TRACTLAB_TUBE_MODELS_HPP

#include "tractlab/generic_model.hpp"
#include "tractlab/mixing.hpp"
#include "tractlab/types.hpp"

namespace tractlab {

// Pre-rectification section values of the 4-tube DRM; may be negative.
struct DrmParams {
    double p1 = 1.0, p2 = 1.0, p3 = 1.0, p4 = 1.0;
};

// Static geometry of the 4-parameter Fant model. Fractions are of the tubelet
// count n; areas in cm^2, lengths in cm. tube_area is the pre-rectification
// value of all tubelets outside the constriction and lip blocks.
struct FantGeometry {
    int n = 200;
    double region_fraction = 0.9;       // Lc: sliding region as fraction of n
    double constriction_fraction = 0.3; // l: constriction block as fraction of n
    double unit_area = 1.0;             // A
    double mean_length_cm = 17.5;       // Lbar
    double length_amplitude_cm = 1.5;   // dL
    double tube_area = 4.0;

    void validate() const;
};

// One Fant configuration: constriction center (tubelet index units),
// pre-rectification constriction and lip areas, total length.
struct FantParams {
    double xc = 0.0;
    double ac = 0.0;
    double al = 0.0;
    double total_length_cm = 17.5;
};

// Coordination setup {Omega, Psi1, Psi2} for (P1, P2, P3, P4), with the mirror
// rules Psi1(2L/3) = -Psi1(L/3), Psi1(L) = -Psi1(0) and equal phases.
CoordinationTriple drm_coordination();

// Explicit reduction: (p1, p2) -> (p1, p2, 2-p2, 2-p1).
DrmParams drm_reduce(double p1, double p2);

// Sections of {n/6, n/3, n/3, n/6} tubelets carrying the rectified values of
// p1..p4; cuts at L/6, L/2, 5L/6 from the glottis. n must be divisible by 6.
SampledAreaFunction drm_area_function(const DrmParams& params, int n = 120, double length_cm = 17.5);

// Coordination rows for {Xc, Ac, Al, L}, Xc scaled to tubelet counts.
CoordinationTriple fant_coordination(const FantGeometry& geom);

// Evaluates the Fant coordination at a cycle point into named parameters.
FantParams fant_params_at(const FantGeometry& geom, const CyclePoint& point);

// Reconstruction: n tubelets of length L/n; a block of round(l n) tubelets
// centered at round(xc) carries ac, the last round((1-Lc) n) tubelets carry al,
// the rest carry tube_area; constriction wins overlaps but is clipped to the
// sliding region [0, Lc n) first; soft rectification applied last.
SampledAreaFunction fant_area_function(const FantParams& params, const FantGeometry& geom);

}  // namespace tractlab

#endif
