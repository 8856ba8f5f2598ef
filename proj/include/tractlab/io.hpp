#ifndef TRACTLAB_IO_HPP
#define TRACTLAB_IO_HPP

#include <string>
#include <vector>

#include "tractlab/acoustics.hpp"
#include "tractlab/analysis.hpp"
#include "tractlab/experiments.hpp"
#include "tractlab/record.hpp"

namespace tractlab {

// `index,x_cm,area_cm2`, one row per tubelet.
std::string area_csv(const SampledAreaFunction& area);

// `f_hz,re,im,mag_db`.
std::string spectrum_csv(const TransferSpectrum& spectrum);

// `condition,index,rho,theta,p1..p4,a1t,a2t,f1,f2,df1,df2,failed` preceded by
// '#' comment lines echoing the config.
std::string dataset_csv(const std::vector<SimulationRecord>& records, const ExperimentConfig& cfg);

// Parses a dataset CSV; malformed rows raise InvalidInput with the line number.
std::vector<SimulationRecord> parse_dataset_csv(const std::string& text);

std::string functional_report_json(const FunctionalReport& report);

const char* model_name(ModelId model);
ModelId model_from_name(const std::string& name);
const char* condition_name(Condition condition);
Condition condition_from_name(const std::string& name);

}  // namespace tractlab

#endif
