#ifndef TRACTLAB_MIXING_HPP
#define TRACTLAB_MIXING_HPP

#include "tractlab/types.hpp"

namespace tractlab {

// Three seed vectors holding the extreme-vowel configurations of a model.
// All three must share one dimension and contain only finite entries.
struct ComponentTriple {
    Vec i, j, k;

    std::size_t dimension() const { return i.size(); }
    void validate() const;
};

// Dual parameterization {offset, amplitude, phase}, one entry per parameter.
// omega and psi1 are in parameter units (psi1 may be negative), psi2 in radians.
struct CoordinationTriple {
    Vec omega, psi1, psi2;

    std::size_t dimension() const { return omega.size(); }
    void validate() const;
};

// Point of the cycle domain: radius rho in [0,1], angle theta wrapped to [0,2pi).
struct CyclePoint {
    double rho;
    double theta;

    CyclePoint(double rho_, double theta_);
};

// Wraps an angle into [0, 2pi).
double normalize_angle(double theta);

// P(theta) = Omega + (2/3)(i cos(theta-pi/3) + j cos(theta-pi) + k cos(theta-5pi/3)).
// Anchors: P(pi/3) = i, P(pi) = j, P(5pi/3) = k.
Vec mix_threephase(const ComponentTriple& seed, double theta);

// Converts {i,j,k} into {Omega, Psi1, Psi2}. Uses the two-argument arctangent on
//   Psi1 cos Psi2 = (2/3)((i+k)/2 - j),  Psi1 sin Psi2 = (2/3)(i-k) sin(pi/3),
// so the conversion is defined even where the plain arctan ratio has a zero
// denominator. A coordinate with i=j=k gets Psi1=0 and, by convention, Psi2=0.
CoordinationTriple to_coordination(const ComponentTriple& seed);

// P(rho,theta) = Omega + rho Psi1 cos(Psi2 - theta), elementwise.
Vec eval_coordination(const CoordinationTriple& coord, const CyclePoint& point);

// Recovers {i,j,k} as the evaluations at rho=1, theta in {pi/3, pi, 5pi/3}.
ComponentTriple components_from_coordination(const CoordinationTriple& coord);

}  // namespace tractlab

#endif
