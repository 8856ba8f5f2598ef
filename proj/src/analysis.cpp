#include "tractlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace tractlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

DctPair dct_coefficients(const SampledAreaFunction& area) {
    const std::size_t n = area.areas.size();
    if (n < 2) throw InvalidInput("dct_coefficients: need at least 2 tubelets");

    double s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double a = area.areas[i - 1];
        s1 += a * std::cos(kPi * static_cast<double>(i) / static_cast<double>(n));
        s2 += a * std::cos(3.0 * kPi * static_cast<double>(i) / static_cast<double>(n));
    }
    const double scale = 2.0 / static_cast<double>(n);
    return {scale * s1, scale * s2};
}

DeviationPair relative_deviations(const FormantSet& f, const FormantSet& f_neutral) {
    if (!(f_neutral.f1 > 0.0) || !(f_neutral.f2 > 0.0)) {
        throw InvalidInput("relative_deviations: neutral formants must be > 0");
    }
    return {(f.f1 - f_neutral.f1) / f_neutral.f1, (f.f2 - f_neutral.f2) / f_neutral.f2};
}

DeviationPair se_estimate(const DctPair& pair, bool first_order) {
    if (first_order) return {-pair.a1_tilde / 2.0, -pair.a2_tilde / 2.0};
    return {-pair.a1_tilde / 2.0 - pair.a2_tilde * pair.a2_tilde / 4.0, -pair.a2_tilde / 2.0};
}

FunctionalReport functional_check(const std::vector<SimulationRecord>& records, double bin_width,
                                  double threshold) {
    if (records.size() < 100) throw InvalidInput("functional_check: need at least 100 records");
    if (!(bin_width > 0.0)) throw InvalidInput("functional_check: bin_width must be > 0");

    struct Extents {
        double min1 = 0.0, max1 = 0.0, min2 = 0.0, max2 = 0.0;
        int count = 0;
    };
    std::map<std::pair<std::int64_t, std::int64_t>, Extents> bins;
    for (const auto& rec : records) {
        if (rec.failed) continue;
        const auto key = std::make_pair(
            static_cast<std::int64_t>(std::floor(rec.dct.a1_tilde / bin_width)),
            static_cast<std::int64_t>(std::floor(rec.dct.a2_tilde / bin_width)));
        auto& e = bins[key];
        if (e.count == 0) {
            e.min1 = e.max1 = rec.deviations.df1;
            e.min2 = e.max2 = rec.deviations.df2;
        } else {
            e.min1 = std::min(e.min1, rec.deviations.df1);
            e.max1 = std::max(e.max1, rec.deviations.df1);
            e.min2 = std::min(e.min2, rec.deviations.df2);
            e.max2 = std::max(e.max2, rec.deviations.df2);
        }
        ++e.count;
    }

    FunctionalReport report;
    report.bin_width = bin_width;
    report.threshold = threshold;
    std::vector<double> spreads1, spreads2;
    for (const auto& [key, e] : bins) {
        FunctionalBin b;
        b.key1 = key.first;
        b.key2 = key.second;
        b.count = e.count;
        b.spread_df1 = e.max1 - e.min1;
        b.spread_df2 = e.max2 - e.min2;
        report.bins.push_back(b);
        spreads1.push_back(b.spread_df1);
        spreads2.push_back(b.spread_df2);
    }

    auto percentile95 = [](std::vector<double> v) {
        if (v.empty()) return 0.0;
        std::sort(v.begin(), v.end());
        const std::size_t idx = static_cast<std::size_t>(
            std::ceil(0.95 * static_cast<double>(v.size()))) - 1;
        return v[std::min(idx, v.size() - 1)];
    };
    report.p95_spread_df1 = percentile95(spreads1);
    report.p95_spread_df2 = percentile95(spreads2);
    report.functional = std::max(report.p95_spread_df1, report.p95_spread_df2) < threshold;
    return report;
}

}  // namespace tractlab
