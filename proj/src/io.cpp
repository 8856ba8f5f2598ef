#include "tractlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace tractlab {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_double(const std::string& field, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(field, &pos);
        if (pos != field.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw InvalidInput("dataset CSV line " + std::to_string(line_no) + ": bad numeric field '" +
                           field + "'");
    }
}

}  // namespace

const char* model_name(ModelId model) {
    switch (model) {
        case ModelId::generic: return "generic";
        case ModelId::drm: return "drm";
        case ModelId::fant: return "fant";
    }
    return "?";
}

ModelId model_from_name(const std::string& name) {
    if (name == "generic") return ModelId::generic;
    if (name == "drm") return ModelId::drm;
    if (name == "fant") return ModelId::fant;
    throw InvalidInput("unknown model '" + name + "'");
}

const char* condition_name(Condition condition) {
    switch (condition) {
        case Condition::C1: return "C1";
        case Condition::C2: return "C2";
        case Condition::vowel_sweep: return "vowel_sweep";
        case Condition::ring_sweep: return "ring_sweep";
    }
    return "?";
}

Condition condition_from_name(const std::string& name) {
    if (name == "C1") return Condition::C1;
    if (name == "C2") return Condition::C2;
    if (name == "vowel_sweep") return Condition::vowel_sweep;
    if (name == "ring_sweep") return Condition::ring_sweep;
    throw InvalidInput("unknown condition '" + name + "'");
}

std::string area_csv(const SampledAreaFunction& area) {
    std::ostringstream out;
    out << "index,x_cm,area_cm2\n";
    for (std::size_t i = 0; i < area.areas.size(); ++i) {
        const double x = (static_cast<double>(i) + 0.5) * area.tubelet_length_cm;
        out << (i + 1) << ',' << fmt(x) << ',' << fmt(area.areas[i]) << '\n';
    }
    return out.str();
}

std::string spectrum_csv(const TransferSpectrum& spectrum) {
    std::ostringstream out;
    out << "f_hz,re,im,mag_db\n";
    for (std::size_t i = 0; i < spectrum.frequencies.size(); ++i) {
        const auto v = spectrum.values[i];
        out << fmt(spectrum.frequencies[i]) << ',' << fmt(v.real()) << ',' << fmt(v.imag()) << ','
            << fmt(20.0 * std::log10(std::abs(v))) << '\n';
    }
    return out.str();
}

std::string dataset_csv(const std::vector<SimulationRecord>& records, const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "# model=" << model_name(cfg.model) << " condition=" << condition_name(cfg.condition)
        << " seed=" << cfg.rng_seed << " samples=" << cfg.sample_count
        << " theta_grid=" << cfg.theta_grid_size << '\n';
    out << "# rng=splitmix64(seed,index)"
        << " c=" << fmt(cfg.constants.sound_speed_c) << " rho_air=" << fmt(cfg.constants.air_density)
        << " loss_coeff=" << fmt(cfg.constants.loss_coefficient)
        << " grid=[" << fmt(cfg.grid.f_min_hz) << ',' << fmt(cfg.grid.f_max_hz) << "]@"
        << fmt(cfg.grid.step_hz) << '\n';
    out << "# generic: L=" << fmt(cfg.generic.length_cm) << " n=" << cfg.generic.n_tubelets
        << " | drm: L=" << fmt(cfg.drm_length_cm) << " n=" << cfg.drm_n
        << " | fant: n=" << cfg.fant.n << " Lc=" << fmt(cfg.fant.region_fraction)
        << " l=" << fmt(cfg.fant.constriction_fraction) << " A=" << fmt(cfg.fant.unit_area)
        << " Lbar=" << fmt(cfg.fant.mean_length_cm) << " dL=" << fmt(cfg.fant.length_amplitude_cm)
        << " tube_area=" << fmt(cfg.fant.tube_area) << '\n';
    out << "condition,index,rho,theta,p1,p2,p3,p4,a1t,a2t,f1,f2,df1,df2,failed\n";
    for (const auto& r : records) {
        out << r.condition << ',' << r.index << ',' << fmt(r.rho) << ',' << fmt(r.theta);
        for (double p : r.params) out << ',' << fmt(p);
        out << ',' << fmt(r.dct.a1_tilde) << ',' << fmt(r.dct.a2_tilde) << ',' << fmt(r.formants.f1)
            << ',' << fmt(r.formants.f2) << ',' << fmt(r.deviations.df1) << ','
            << fmt(r.deviations.df2) << ',' << (r.failed ? 1 : 0) << '\n';
    }
    return out.str();
}

std::vector<SimulationRecord> parse_dataset_csv(const std::string& text) {
    std::vector<SimulationRecord> records;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line.rfind("condition,", 0) != 0) {
                throw InvalidInput("dataset CSV line " + std::to_string(line_no) +
                                   ": expected header row");
            }
            saw_header = true;
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 15) {
            throw InvalidInput("dataset CSV line " + std::to_string(line_no) + ": expected 15 fields, got " +
                               std::to_string(fields.size()));
        }
        SimulationRecord r;
        r.condition = fields[0];
        r.index = static_cast<std::int64_t>(parse_double(fields[1], line_no));
        r.rho = parse_double(fields[2], line_no);
        r.theta = parse_double(fields[3], line_no);
        for (int m = 0; m < 4; ++m) r.params[m] = parse_double(fields[4 + m], line_no);
        r.dct.a1_tilde = parse_double(fields[8], line_no);
        r.dct.a2_tilde = parse_double(fields[9], line_no);
        r.formants.f1 = parse_double(fields[10], line_no);
        r.formants.f2 = parse_double(fields[11], line_no);
        r.deviations.df1 = parse_double(fields[12], line_no);
        r.deviations.df2 = parse_double(fields[13], line_no);
        r.failed = parse_double(fields[14], line_no) != 0.0;
        records.push_back(std::move(r));
    }
    if (!saw_header) throw InvalidInput("dataset CSV: no header row found");
    return records;
}

std::string functional_report_json(const FunctionalReport& report) {
    nlohmann::json j;
    j["bin_width"] = report.bin_width;
    j["threshold"] = report.threshold;
    j["p95_spread_df1"] = report.p95_spread_df1;
    j["p95_spread_df2"] = report.p95_spread_df2;
    j["functional"] = report.functional;
    j["bins"] = nlohmann::json::array();
    for (const auto& b : report.bins) {
        j["bins"].push_back({{"key1", b.key1},
                             {"key2", b.key2},
                             {"count", b.count},
                             {"spread_df1", b.spread_df1},
                             {"spread_df2", b.spread_df2}});
    }
    return j.dump(2) + "\n";
}

}  // namespace tractlab
