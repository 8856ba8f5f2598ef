// tractlab: vocal-tract vowel-space simulator CLI.
// Subcommands: vowels, space, mc, analyze, spectrum.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tractlab/analysis.hpp"
#include "tractlab/experiments.hpp"
#include "tractlab/io.hpp"
#include "tractlab/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tractlab;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kPi = std::numbers::pi;

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitNumeric = 4;

struct GlobalOptions {
    std::string out_dir;
    std::string config_path;
    std::uint64_t seed = 0;
};

void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InvalidInput("config file " + path + ": " + e.what());
    }
    if (j.contains("n")) cfg.fant.n = j["n"];
    if (j.contains("region_fraction")) cfg.fant.region_fraction = j["region_fraction"];
    if (j.contains("constriction_fraction")) cfg.fant.constriction_fraction = j["constriction_fraction"];
    if (j.contains("unit_area")) cfg.fant.unit_area = j["unit_area"];
    if (j.contains("mean_length_cm")) cfg.fant.mean_length_cm = j["mean_length_cm"];
    if (j.contains("length_amplitude_cm")) cfg.fant.length_amplitude_cm = j["length_amplitude_cm"];
    if (j.contains("tube_area")) cfg.fant.tube_area = j["tube_area"];
    if (j.contains("generic_length_cm")) cfg.generic.length_cm = j["generic_length_cm"];
    if (j.contains("generic_n")) cfg.generic.n_tubelets = j["generic_n"];
    if (j.contains("drm_n")) cfg.drm_n = j["drm_n"];
    if (j.contains("drm_length_cm")) cfg.drm_length_cm = j["drm_length_cm"];
    if (j.contains("sound_speed_c")) cfg.constants.sound_speed_c = j["sound_speed_c"];
    if (j.contains("air_density")) cfg.constants.air_density = j["air_density"];
    if (j.contains("loss_coefficient")) cfg.constants.loss_coefficient = j["loss_coefficient"];
    if (j.contains("f_min_hz")) cfg.grid.f_min_hz = j["f_min_hz"];
    if (j.contains("f_max_hz")) cfg.grid.f_max_hz = j["f_max_hz"];
    if (j.contains("step_hz")) cfg.grid.step_hz = j["step_hz"];
}

json config_json(const ExperimentConfig& cfg) {
    json j;
    j["model"] = model_name(cfg.model);
    j["condition"] = condition_name(cfg.condition);
    j["sample_count"] = cfg.sample_count;
    j["rng_seed"] = cfg.rng_seed;
    j["rng"] = "splitmix64(seed,index)";
    j["theta_grid_size"] = cfg.theta_grid_size;
    j["threads"] = cfg.threads;
    j["generic"] = {{"length_cm", cfg.generic.length_cm}, {"n_tubelets", cfg.generic.n_tubelets}};
    j["drm"] = {{"n", cfg.drm_n}, {"length_cm", cfg.drm_length_cm}};
    j["fant"] = {{"n", cfg.fant.n},
                 {"region_fraction", cfg.fant.region_fraction},
                 {"constriction_fraction", cfg.fant.constriction_fraction},
                 {"unit_area", cfg.fant.unit_area},
                 {"mean_length_cm", cfg.fant.mean_length_cm},
                 {"length_amplitude_cm", cfg.fant.length_amplitude_cm},
                 {"tube_area", cfg.fant.tube_area}};
    j["constants"] = {{"sound_speed_c", cfg.constants.sound_speed_c},
                      {"air_density", cfg.constants.air_density},
                      {"loss_coefficient", cfg.constants.loss_coefficient}};
    j["grid"] = {{"f_min_hz", cfg.grid.f_min_hz},
                 {"f_max_hz", cfg.grid.f_max_hz},
                 {"step_hz", cfg.grid.step_hz}};
    return j;
}

class OutputSet {
public:
    OutputSet(const fs::path& dir, std::string command)
        : dir_(dir), command_(std::move(command)), start_(std::chrono::steady_clock::now()) {
        fs::create_directories(dir_);
    }

    void write(const std::string& name, const std::string& content) {
        const fs::path path = dir_ / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw InvalidInput("cannot open output file: " + path.string());
        out << content;
        if (!out) throw InvalidInput("write failed: " + path.string());
        files_.push_back(name);
        std::cout << "wrote " << path.string() << "\n";
    }

    void write_manifest(const ExperimentConfig& cfg) {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_);
        json j;
        j["command"] = command_;
        j["version"] = kVersion;
        j["seed"] = cfg.rng_seed;
        j["config"] = config_json(cfg);
        j["outputs"] = files_;
        j["duration_ms"] = elapsed.count();
        const fs::path path = dir_ / (command_ + "_manifest.json");
        std::ofstream out(path, std::ios::binary);
        out << j.dump(2) << "\n";
        std::cout << "wrote " << path.string() << "\n";
    }

private:
    fs::path dir_;
    std::string command_;
    std::vector<std::string> files_;
    std::chrono::steady_clock::time_point start_;
};

std::string fmt_coeff(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    std::string s = buf;
    if (s == "-0") s = "0";
    return s;
}

// Area-function panel into a pixel box.
void draw_area_panel(SvgCanvas& svg, const PlotFrame& frame, const SampledAreaFunction& area,
                     const std::string& title) {
    svg.rect(frame.px, frame.py, frame.pw, frame.ph, "#888");
    std::vector<std::array<double, 2>> pts;
    for (std::size_t i = 0; i < area.areas.size(); ++i) {
        const double x = (static_cast<double>(i) + 0.5) * area.tubelet_length_cm;
        pts.push_back({frame.x(x), frame.y(area.areas[i])});
    }
    svg.polyline(pts, "#1f5fbf", 1.5);
    svg.text(frame.px + 4, frame.py + 14, title, 11);
}

void draw_axes(SvgCanvas& svg, const PlotFrame& frame, const std::string& xlabel,
               const std::string& ylabel) {
    svg.rect(frame.px, frame.py, frame.pw, frame.ph, "#444");
    svg.text(frame.px + frame.pw / 2 - 20, frame.py + frame.ph + 28, xlabel, 12);
    svg.text(frame.px - 44, frame.py + frame.ph / 2, ylabel, 12);
    // corner ticks
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", frame.xmin);
    svg.text(frame.px - 8, frame.py + frame.ph + 14, buf, 9);
    std::snprintf(buf, sizeof(buf), "%.0f", frame.xmax);
    svg.text(frame.px + frame.pw - 16, frame.py + frame.ph + 14, buf, 9);
    std::snprintf(buf, sizeof(buf), "%.0f", frame.ymin);
    svg.text(frame.px - 36, frame.py + frame.ph - 2, buf, 9);
    std::snprintf(buf, sizeof(buf), "%.0f", frame.ymax);
    svg.text(frame.px - 36, frame.py + 10, buf, 9);
}

PlotFrame formant_frame(const std::vector<SimulationRecord>& records, double px, double py,
                        double pw, double ph) {
    double f1min = 1e9, f1max = -1e9, f2min = 1e9, f2max = -1e9;
    for (const auto& r : records) {
        if (r.failed) continue;
        f1min = std::min(f1min, r.formants.f1);
        f1max = std::max(f1max, r.formants.f1);
        f2min = std::min(f2min, r.formants.f2);
        f2max = std::max(f2max, r.formants.f2);
    }
    const double mx = 0.08 * (f1max - f1min + 1.0), my = 0.08 * (f2max - f2min + 1.0);
    return {px, py, pw, ph, f1min - mx, f1max + mx, f2min - my, f2max + my};
}

int cmd_vowels(const GlobalOptions& opts, ExperimentConfig cfg) {
    cfg.condition = Condition::vowel_sweep;
    OutputSet out(opts.out_dir, std::string("vowels_") + model_name(cfg.model));

    const auto records = run_condition(cfg);
    std::vector<SampledAreaFunction> areas;
    for (const auto& r : records) {
        Vec params(r.params, r.params + model_dimension(cfg.model));
        areas.push_back(model_area_function(cfg, params));
    }
    for (std::size_t v = 0; v < records.size(); ++v) {
        out.write(std::string("vowel_") + vowel_targets()[v].slug + ".csv", area_csv(areas[v]));
    }

    // 8 area panels (2 rows) + formant chart below
    SvgCanvas svg(880, 640);
    double amax = 0.0, xmax = 0.0;
    for (const auto& a : areas) {
        xmax = std::max(xmax, a.total_length_cm());
        for (double s : a.areas) amax = std::max(amax, s);
    }
    for (std::size_t v = 0; v < records.size(); ++v) {
        const double px = 20.0 + (v % 4) * 215.0;
        const double py = 20.0 + (v / 4) * 140.0;
        const PlotFrame frame{px, py, 195.0, 120.0, 0.0, xmax, 0.0, amax * 1.05};
        const FourierPair amps = fourier_amplitudes(CyclePoint(1.0, records[v].theta));
        const std::string title = "[" + records[v].label + "]  (" + fmt_coeff(amps.a1) + "," +
                                  fmt_coeff(amps.a2) + ")";
        draw_area_panel(svg, frame, areas[v], title);
    }
    const PlotFrame chart = formant_frame(records, 90.0, 330.0, 700.0, 260.0);
    draw_axes(svg, chart, "f1 (Hz)", "f2 (Hz)");
    for (const auto& r : records) {
        if (r.failed) continue;
        svg.circle(chart.x(r.formants.f1), chart.y(r.formants.f2), 3.5, "#c0392b");
        svg.text(chart.x(r.formants.f1) + 6, chart.y(r.formants.f2) - 4, "[" + r.label + "]", 11);
    }
    out.write(std::string("vowels_") + model_name(cfg.model) + ".svg", svg.render());
    out.write(std::string("vowels_") + model_name(cfg.model) + ".csv", dataset_csv(records, cfg));
    out.write_manifest(cfg);
    return 0;
}

int cmd_space(const GlobalOptions& opts, ExperimentConfig cfg) {
    cfg.condition = Condition::ring_sweep;
    OutputSet out(opts.out_dir, std::string("space_") + model_name(cfg.model));
    const auto ring = run_condition(cfg);

    ExperimentConfig vcfg = cfg;
    vcfg.condition = Condition::vowel_sweep;
    const auto vowels = run_condition(vcfg);

    SvgCanvas svg(640, 520);
    const PlotFrame chart = formant_frame(ring, 90.0, 30.0, 500.0, 420.0);
    draw_axes(svg, chart, "f1 (Hz)", "f2 (Hz)");
    std::vector<std::array<double, 2>> pts;
    for (const auto& r : ring) {
        if (!r.failed) pts.push_back({chart.x(r.formants.f1), chart.y(r.formants.f2)});
    }
    svg.polyline(pts, "#1f5fbf", 1.5, true);
    for (const auto& r : vowels) {
        if (r.failed) continue;
        svg.circle(chart.x(r.formants.f1), chart.y(r.formants.f2), 3.5, "#c0392b");
        svg.text(chart.x(r.formants.f1) + 6, chart.y(r.formants.f2) - 4, "[" + r.label + "]", 11);
    }
    out.write(std::string("space_") + model_name(cfg.model) + ".svg", svg.render());
    out.write(std::string("space_") + model_name(cfg.model) + ".csv", dataset_csv(ring, cfg));
    out.write_manifest(cfg);
    return 0;
}

int cmd_mc(const GlobalOptions& opts, ExperimentConfig cfg) {
    const std::string stem = std::string("mc_") + model_name(cfg.model) + "_" +
                             condition_name(cfg.condition);
    OutputSet out(opts.out_dir, stem);
    const auto records = run_condition(cfg);
    out.write(stem + ".csv", dataset_csv(records, cfg));

    // C2 reference ring for the overlay
    ExperimentConfig rcfg = cfg;
    rcfg.condition = Condition::ring_sweep;
    const auto ring = run_condition(rcfg);

    std::vector<SimulationRecord> all = records;
    all.insert(all.end(), ring.begin(), ring.end());
    SvgCanvas svg(640, 520);
    const PlotFrame chart = formant_frame(all, 90.0, 30.0, 500.0, 420.0);
    draw_axes(svg, chart, "f1 (Hz)", "f2 (Hz)");
    for (const auto& r : records) {
        if (!r.failed) svg.circle(chart.x(r.formants.f1), chart.y(r.formants.f2), 1.2, "#777");
    }
    std::vector<std::array<double, 2>> ring_pts;
    for (const auto& r : ring) {
        if (!r.failed) ring_pts.push_back({chart.x(r.formants.f1), chart.y(r.formants.f2)});
    }
    svg.polyline(ring_pts, "#1f5fbf", 2.0, true);

    if (cfg.model != ModelId::fant) {
        // "SE" and "est" reference curves mapped back through f_i = f_in (1 + df_i)
        const FormantSet neutral = neutral_reference(cfg.model == ModelId::generic
                                                         ? ModelId::generic
                                                         : ModelId::drm,
                                                     cfg.constants, cfg.grid);
        std::vector<std::array<double, 2>> se_pts, est_pts;
        for (const auto& r : ring) {
            const DeviationPair se = se_estimate(r.dct, true);
            const DeviationPair est = se_estimate(r.dct, false);
            se_pts.push_back({chart.x(neutral.f1 * (1.0 + se.df1)), chart.y(neutral.f2 * (1.0 + se.df2))});
            est_pts.push_back({chart.x(neutral.f1 * (1.0 + est.df1)), chart.y(neutral.f2 * (1.0 + est.df2))});
        }
        svg.polyline(se_pts, "#27ae60", 1.2, true);
        svg.polyline(est_pts, "#8e44ad", 1.2, true);
        svg.text(540, 50, "C2 ring", 11, "#1f5fbf");
        svg.text(540, 66, "SE", 11, "#27ae60");
        svg.text(540, 82, "est", 11, "#8e44ad");
    }
    out.write(stem + ".svg", svg.render());

    std::size_t failed = 0;
    for (const auto& r : records) failed += r.failed ? 1 : 0;
    if (failed > 0) {
        std::cout << failed << " of " << records.size() << " records flagged as extraction failures\n";
    }
    out.write_manifest(cfg);
    return 0;
}

int cmd_analyze(const GlobalOptions& opts, ExperimentConfig cfg, const std::string& dataset_path,
                double bin_width, double threshold) {
    std::ifstream in(dataset_path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open dataset: " + dataset_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto records = parse_dataset_csv(buffer.str());

    OutputSet out(opts.out_dir, "analyze");
    const FunctionalReport report = functional_check(records, bin_width, threshold);
    out.write("functional_report.json", functional_report_json(report));

    // df_i vs a~_i panels, C1 dots vs C2/sweep points
    for (int panel = 0; panel < 2; ++panel) {
        SvgCanvas svg(640, 520);
        double amin = 1e9, amax = -1e9, dmin = 1e9, dmax = -1e9;
        for (const auto& r : records) {
            if (r.failed) continue;
            const double a = panel == 0 ? r.dct.a1_tilde : r.dct.a2_tilde;
            const double d = panel == 0 ? r.deviations.df1 : r.deviations.df2;
            amin = std::min(amin, a); amax = std::max(amax, a);
            dmin = std::min(dmin, d); dmax = std::max(dmax, d);
        }
        const PlotFrame chart{90.0, 30.0, 500.0, 420.0, amin - 0.05, amax + 0.05, dmin - 0.05,
                              dmax + 0.05};
        draw_axes(svg, chart, panel == 0 ? "a1~" : "a2~", panel == 0 ? "df1" : "df2");
        for (const auto& r : records) {
            if (r.failed) continue;
            const double a = panel == 0 ? r.dct.a1_tilde : r.dct.a2_tilde;
            const double d = panel == 0 ? r.deviations.df1 : r.deviations.df2;
            const bool c1 = r.condition == "C1";
            svg.circle(chart.x(a), chart.y(d), c1 ? 1.2 : 1.8, c1 ? "#777" : "#1f5fbf");
        }
        out.write(panel == 0 ? "analyze_df1.svg" : "analyze_df2.svg", svg.render());
    }
    out.write_manifest(cfg);
    std::cout << "functional=" << (report.functional ? "true" : "false")
              << " p95_df1=" << report.p95_spread_df1 << " p95_df2=" << report.p95_spread_df2
              << "\n";
    return 0;
}

int cmd_spectrum(const GlobalOptions& opts, ExperimentConfig cfg, double rho, double theta) {
    OutputSet out(opts.out_dir, std::string("spectrum_") + model_name(cfg.model));
    const CyclePoint point(rho, theta);
    const Vec params = eval_coordination(model_coordination(cfg), point);
    const SampledAreaFunction area = model_area_function(cfg, params);
    const AcousticConstants constants = constants_for_model(cfg.model, cfg.constants);
    const TransferSpectrum spectrum = transfer_spectrum(area, cfg.grid, constants);

    out.write(std::string("spectrum_") + model_name(cfg.model) + ".csv", spectrum_csv(spectrum));
    out.write(std::string("area_") + model_name(cfg.model) + ".csv", area_csv(area));

    const FormantSet f = find_formants(spectrum, 2);
    std::cout << "f1=" << f.f1 << " Hz, f2=" << f.f2 << " Hz\n";
    out.write_manifest(cfg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tractlab: vocal-tract vowel-space simulator"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    GlobalOptions opts;
    const char* env_out = std::getenv("TRACTLAB_OUT");
    opts.out_dir = env_out != nullptr ? env_out : ".";
    app.add_option("--out", opts.out_dir, "output directory");
    app.add_option("--config", opts.config_path, "JSON config file");
    app.add_option("--seed", opts.seed, "RNG seed");

    std::string model = "generic", condition = "C2", dataset_path;
    int samples = 5000, theta_grid = 96, threads = 1;
    double bin_width = 0.05, threshold = 0.02, rho = 1.0, theta = 0.0;

    auto* vowels = app.add_subcommand("vowels", "8-vowel sweep: area CSVs + figure");
    vowels->add_option("--model", model, "generic|drm|fant");

    auto* space = app.add_subcommand("space", "rho=1 ring sweep of the vowel space");
    space->add_option("--model", model, "generic|drm|fant");
    space->add_option("--theta-grid", theta_grid, "ring resolution");

    auto* mc = app.add_subcommand("mc", "Monte Carlo simulation (C1 or C2)");
    mc->add_option("--model", model, "generic|drm|fant");
    mc->add_option("--condition", condition, "C1|C2");
    mc->add_option("--n", samples, "number of random draws");
    mc->add_option("--theta-grid", theta_grid, "C2 ring resolution");
    mc->add_option("--threads", threads, "worker threads (0 = hardware)");

    auto* analyze = app.add_subcommand("analyze", "functional check of a dataset CSV");
    analyze->add_option("dataset", dataset_path, "dataset CSV path")->required();
    analyze->add_option("--bin-width", bin_width, "bin width on (a1~, a2~)");
    analyze->add_option("--threshold", threshold, "functional spread threshold");

    auto* spectrum = app.add_subcommand("spectrum", "transfer spectrum of one configuration");
    spectrum->add_option("--model", model, "generic|drm|fant");
    spectrum->add_option("--rho", rho, "cycle radius in [0,1]");
    spectrum->add_option("--theta", theta, "cycle angle (radians)");

    CLI11_PARSE(app, argc, argv);

    try {
        ExperimentConfig cfg;
        cfg.rng_seed = opts.seed;
        cfg.sample_count = samples;
        cfg.theta_grid_size = theta_grid;
        cfg.threads = threads;
        if (!opts.config_path.empty()) apply_config_file(cfg, opts.config_path);
        if (!app.get_subcommand("analyze")->parsed()) {
            try {
                cfg.model = model_from_name(model);
            } catch (const InvalidInput& e) {
                std::cerr << "usage error: " << e.what() << "\n";
                return kExitUsage;
            }
        }

        if (vowels->parsed()) return cmd_vowels(opts, cfg);
        if (space->parsed()) return cmd_space(opts, cfg);
        if (mc->parsed()) {
            cfg.condition = condition_from_name(condition);
            if (cfg.condition != Condition::C1 && cfg.condition != Condition::C2) {
                std::cerr << "mc: condition must be C1 or C2\n";
                return kExitUsage;
            }
            return cmd_mc(opts, cfg);
        }
        if (analyze->parsed()) return cmd_analyze(opts, cfg, dataset_path, bin_width, threshold);
        if (spectrum->parsed()) return cmd_spectrum(opts, cfg, rho, theta);
        return kExitUsage;
    } catch (const FormantExtractionError& e) {
        std::cerr << "numeric failure: " << e.what() << " (found " << e.found() << ")\n";
        return kExitNumeric;
    } catch (const InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
