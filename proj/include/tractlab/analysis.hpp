#ifndef TRACTLAB_ANALYSIS_HPP
#define TRACTLAB_ANALYSIS_HPP

#include <cstdint>
#include <vector>

#include "tractlab/record.hpp"

namespace tractlab {

// Cosine coefficients a~1, a~2 = (2/n) sum_{i=1..n} A(i) cos(m pi i/n), m=1,3.
// The i=1..n convention carries an O(1/n) boundary bias: the uniform unit tube
// yields -2/n for both, not 0.
DctPair dct_coefficients(const SampledAreaFunction& area);

// (df1, df2) = ((f1-f1n)/f1n, (f2-f2n)/f2n).
DeviationPair relative_deviations(const FormantSet& f, const FormantSet& f_neutral);

// Quadratic-biased estimate df1 = -a~1/2 - a~2^2/4, df2 = -a~2/2; with
// first_order set, the plain relation (-a~1/2, -a~2/2).
DeviationPair se_estimate(const DctPair& pair, bool first_order = false);

struct FunctionalBin {
    std::int64_t key1 = 0, key2 = 0;  // floor(a~_i / bin_width)
    int count = 0;
    double spread_df1 = 0.0;  // max - min within the bin
    double spread_df2 = 0.0;
};

struct FunctionalReport {
    double bin_width = 0.0;
    double threshold = 0.0;
    std::vector<FunctionalBin> bins;
    double p95_spread_df1 = 0.0;
    double p95_spread_df2 = 0.0;
    bool functional = false;  // max of the two percentiles below threshold
};

// Bins the non-failed records on (a~1, a~2) and reports within-bin df spreads.
// Requires at least 100 records.
FunctionalReport functional_check(const std::vector<SimulationRecord>& records, double bin_width,
                                  double threshold);

}  // namespace tractlab

#endif
