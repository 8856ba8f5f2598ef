#ifndef TRACTLAB_EXPERIMENTS_HPP
#define TRACTLAB_EXPERIMENTS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "tractlab/acoustics.hpp"
#include "tractlab/record.hpp"
#include "tractlab/tube_models.hpp"

namespace tractlab {

enum class Condition { C1, C2, vowel_sweep, ring_sweep };

struct ExperimentConfig {
    ModelId model = ModelId::drm;
    Condition condition = Condition::C2;
    int sample_count = 5000;
    std::uint64_t rng_seed = 0;
    int theta_grid_size = 96;
    int threads = 1;  // 0 = hardware concurrency

    GenericConfig generic;
    FantGeometry fant;
    int drm_n = 120;
    double drm_length_cm = 17.5;
    AcousticConstants constants;  // loss_model is forced per model
    FrequencyGrid grid;

    void validate() const;
};

// Counter-based stream: splitmix64 keyed by (seed, draw index), so serial and
// parallel runs draw identical values per record.
class RecordRng {
public:
    RecordRng(std::uint64_t seed, std::uint64_t index);
    std::uint64_t next_u64();
    double next_uniform();                     // [0, 1)
    double next_uniform(double lo, double hi);

private:
    std::uint64_t state_;
};

// Coordination rows of a model's raw parameter vector: (a1, a2) for the
// generic model, (P1..P4) for the DRM, (Xc, Ac, Al, L) for the Fant model.
CoordinationTriple model_coordination(const ExperimentConfig& cfg);

// Number of raw parameters of the model (2 or 4).
int model_dimension(ModelId model);

// Reconstructs the sampled area function from a raw parameter vector.
SampledAreaFunction model_area_function(const ExperimentConfig& cfg, const Vec& params);

// Loss setting per model: lossless for generic/DRM, lossy for Fant.
AcousticConstants constants_for_model(ModelId model, AcousticConstants base);

// Runs one condition. C1 draws every parameter independently, uniformly on
// [Omega-|Psi1|, Omega+|Psi1|]. C2 is a deterministic rho=1 ring over
// theta_grid_size angles followed by sample_count draws with rho ~ U[0,1],
// theta ~ U[0,2pi). ring_sweep is the ring alone; vowel_sweep the 8 vowels.
// Deterministic: identical config (any thread count) gives identical records.
std::vector<SimulationRecord> run_condition(const ExperimentConfig& cfg);

// Convex hull (counterclockwise) of the (f1, f2) points of non-failed records.
std::vector<std::array<double, 2>> vowel_space_hull(const std::vector<SimulationRecord>& records);

bool point_in_hull(const std::vector<std::array<double, 2>>& hull, double x, double y);

// Fraction of non-failed records whose (f1, f2) falls inside the hull.
double hull_coverage(const std::vector<std::array<double, 2>>& hull,
                     const std::vector<SimulationRecord>& records);

}  // namespace tractlab

#endif
