#include "tractlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "tractlab/analysis.hpp"

namespace tractlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

const char* condition_tag(Condition c) {
    switch (c) {
        case Condition::C1: return "C1";
        case Condition::C2: return "C2";
        case Condition::vowel_sweep: return "vowel_sweep";
        case Condition::ring_sweep: return "ring_sweep";
    }
    return "?";
}

}  // namespace

void ExperimentConfig::validate() const {
    if (sample_count < 0) throw InvalidInput("experiment config: sample_count must be >= 0");
    if (theta_grid_size < 1) throw InvalidInput("experiment config: theta_grid_size must be >= 1");
    if (threads < 0) throw InvalidInput("experiment config: threads must be >= 0");
    generic.validate();
    fant.validate();
    constants.validate();
    grid.validate();
}

RecordRng::RecordRng(std::uint64_t seed, std::uint64_t index)
    : state_(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1))) {
    // burn one output to decorrelate nearby indices
    splitmix64(state_);
}

std::uint64_t RecordRng::next_u64() { return splitmix64(state_); }

double RecordRng::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RecordRng::next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_uniform();
}

int model_dimension(ModelId model) {
    return model == ModelId::generic ? 2 : 4;
}

CoordinationTriple model_coordination(const ExperimentConfig& cfg) {
    switch (cfg.model) {
        case ModelId::generic: {
            // (a1, a2) = (2 rho cos theta, alpha rho sin theta) in dual form.
            const double alpha = (4.0 / 3.0) * std::sin(kPi / 3.0);
            CoordinationTriple coord;
            coord.omega = {0.0, 0.0};
            coord.psi1 = {2.0, alpha};
            coord.psi2 = {0.0, kPi / 2.0};
            return coord;
        }
        case ModelId::drm:
            return drm_coordination();
        case ModelId::fant:
            return fant_coordination(cfg.fant);
    }
    throw InvalidInput("unknown model");
}

SampledAreaFunction model_area_function(const ExperimentConfig& cfg, const Vec& params) {
    switch (cfg.model) {
        case ModelId::generic: {
            if (params.size() != 2) throw InvalidInput("generic model expects 2 parameters");
            return generic_area_from_amplitudes({params[0], params[1]}, cfg.generic);
        }
        case ModelId::drm: {
            if (params.size() != 4) throw InvalidInput("drm expects 4 parameters");
            DrmParams p{params[0], params[1], params[2], params[3]};
            return drm_area_function(p, cfg.drm_n, cfg.drm_length_cm);
        }
        case ModelId::fant: {
            if (params.size() != 4) throw InvalidInput("fant model expects 4 parameters");
            FantParams p{params[0], params[1], params[2], params[3]};
            return fant_area_function(p, cfg.fant);
        }
    }
    throw InvalidInput("unknown model");
}

AcousticConstants constants_for_model(ModelId model, AcousticConstants base) {
    base.loss_model = model == ModelId::fant ? LossModel::simple_lossy : LossModel::lossless;
    return base;
}

namespace {

// Draw inputs for one record; acoustic evaluation happens separately so the
// draws stay a pure function of (seed, index).
struct Draw {
    double rho = kNaN;
    double theta = kNaN;
    std::string label;
    Vec params;
};

SimulationRecord evaluate_record(const ExperimentConfig& cfg, const Draw& draw,
                                 std::int64_t index, const FormantSet& neutral,
                                 const AcousticConstants& constants) {
    SimulationRecord rec;
    rec.condition = condition_tag(cfg.condition);
    rec.index = index;
    rec.label = draw.label;
    rec.rho = draw.rho;
    rec.theta = draw.theta;
    for (std::size_t m = 0; m < 4; ++m) {
        rec.params[m] = m < draw.params.size() ? draw.params[m] : kNaN;
    }

    const SampledAreaFunction area = model_area_function(cfg, draw.params);
    rec.dct = dct_coefficients(area);
    try {
        rec.formants = find_formants(transfer_spectrum(area, cfg.grid, constants), 2);
        rec.deviations = relative_deviations(rec.formants, neutral);
    } catch (const FormantExtractionError&) {
        rec.failed = true;
        rec.formants = {kNaN, kNaN, std::nullopt};
        rec.deviations = {kNaN, kNaN};
    }
    return rec;
}

}  // namespace

std::vector<SimulationRecord> run_condition(const ExperimentConfig& cfg) {
    cfg.validate();
    const CoordinationTriple coord = model_coordination(cfg);
    const AcousticConstants constants = constants_for_model(cfg.model, cfg.constants);
    const FormantSet neutral =
        find_formants(transfer_spectrum(model_area_function(cfg, coord.omega), cfg.grid, constants), 2);

    std::vector<Draw> draws;
    switch (cfg.condition) {
        case Condition::C1: {
            const int dim = model_dimension(cfg.model);
            draws.resize(cfg.sample_count);
            for (int idx = 0; idx < cfg.sample_count; ++idx) {
                RecordRng rng(cfg.rng_seed, static_cast<std::uint64_t>(idx));
                Draw& d = draws[idx];
                d.params.resize(dim);
                for (int m = 0; m < dim; ++m) {
                    const double half = std::abs(coord.psi1[m]);
                    d.params[m] = rng.next_uniform(coord.omega[m] - half, coord.omega[m] + half);
                }
            }
            break;
        }
        case Condition::C2:
        case Condition::ring_sweep: {
            for (int g = 0; g < cfg.theta_grid_size; ++g) {
                Draw d;
                d.rho = 1.0;
                d.theta = 2.0 * kPi * g / cfg.theta_grid_size;
                d.params = eval_coordination(coord, CyclePoint(d.rho, d.theta));
                draws.push_back(std::move(d));
            }
            if (cfg.condition == Condition::C2) {
                for (int idx = 0; idx < cfg.sample_count; ++idx) {
                    RecordRng rng(cfg.rng_seed, static_cast<std::uint64_t>(idx));
                    Draw d;
                    d.rho = rng.next_uniform();
                    d.theta = rng.next_uniform(0.0, 2.0 * kPi);
                    d.params = eval_coordination(coord, CyclePoint(d.rho, d.theta));
                    draws.push_back(std::move(d));
                }
            }
            break;
        }
        case Condition::vowel_sweep: {
            for (const VowelTarget& v : vowel_targets()) {
                Draw d;
                d.rho = 1.0;
                d.theta = v.theta;
                d.label = v.label;
                d.params = eval_coordination(coord, CyclePoint(1.0, v.theta));
                draws.push_back(std::move(d));
            }
            break;
        }
    }

    std::vector<SimulationRecord> records(draws.size());
    unsigned n_threads = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
    n_threads = std::max(1u, std::min<unsigned>(n_threads, draws.size() == 0 ? 1 : draws.size()));

    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            records[idx] = evaluate_record(cfg, draws[idx], static_cast<std::int64_t>(idx),
                                           neutral, constants);
        }
    };
    if (n_threads == 1) {
        worker(0, draws.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (draws.size() + n_threads - 1) / n_threads;
        for (unsigned t = 0; t < n_threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(draws.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return records;
}

std::vector<std::array<double, 2>> vowel_space_hull(const std::vector<SimulationRecord>& records) {
    std::vector<std::array<double, 2>> pts;
    for (const auto& rec : records) {
        if (!rec.failed) pts.push_back({rec.formants.f1, rec.formants.f2});
    }
    if (pts.size() < 3) throw InvalidInput("vowel_space_hull: need at least 3 non-failed records");

    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    auto cross = [](const std::array<double, 2>& o, const std::array<double, 2>& a,
                    const std::array<double, 2>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };

    // Andrew monotone chain
    std::vector<std::array<double, 2>> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw DegenerateHull("vowel_space_hull: input points are collinear");
    return hull;
}

bool point_in_hull(const std::vector<std::array<double, 2>>& hull, double x, double y) {
    if (hull.size() < 3) return false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        const double cross = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
        if (cross < 0.0) return false;  // hull is counterclockwise; boundary counts as inside
    }
    return true;
}

double hull_coverage(const std::vector<std::array<double, 2>>& hull,
                     const std::vector<SimulationRecord>& records) {
    std::size_t total = 0, inside = 0;
    for (const auto& rec : records) {
        if (rec.failed) continue;
        ++total;
        if (point_in_hull(hull, rec.formants.f1, rec.formants.f2)) ++inside;
    }
    if (total == 0) throw InvalidInput("hull_coverage: no non-failed records");
    return static_cast<double>(inside) / static_cast<double>(total);
}

}  // namespace tractlab
