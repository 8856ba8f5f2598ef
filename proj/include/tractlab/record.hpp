#ifndef TRACTLAB_RECORD_HPP
#define TRACTLAB_RECORD_HPP

#include <cstdint>
#include <string>

#include "tractlab/acoustics.hpp"
#include "tractlab/types.hpp"

namespace tractlab {

struct DctPair {
    double a1_tilde = 0.0;
    double a2_tilde = 0.0;
};

struct DeviationPair {
    double df1 = 0.0;
    double df2 = 0.0;
};

// One Monte Carlo draw or sweep point. For C1 draws there is no cycle point and
// rho/theta are NaN; models with fewer than 4 parameters pad params with NaN.
struct SimulationRecord {
    std::string condition;
    std::int64_t index = 0;
    std::string label;       // vowel label for sweep records, empty otherwise
    double rho = 0.0;
    double theta = 0.0;
    double params[4] = {0.0, 0.0, 0.0, 0.0};  // pre-rectification
    DctPair dct;
    FormantSet formants;
    DeviationPair deviations;
    bool failed = false;
};

}  // namespace tractlab

#endif
