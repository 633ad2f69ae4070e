#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "core/model.hpp"
#include "core/observables.hpp"
#include "core/series_io.hpp"

namespace jcm {

enum class Solver { Exact, Rk4 };
enum class OutputFormat { Csv, Json };

/// Output columns, in their fixed file order after tau.
enum class Observable { Entropy, Concurrence, Inversion, G2, Norm, Excitation };

std::string_view column_name(Observable o);
std::vector<Observable> all_observables();

struct ExperimentConfig {
    ModelParams model;
    double tau_max = 100.0;
    double dtau_out = 0.05;
    Solver solver = Solver::Exact;
    double dt = 1e-3;
    std::vector<Observable> observables = all_observables();
    std::filesystem::path out_dir = ".";
    OutputFormat format = OutputFormat::Csv;
    bool plot = false;
};

/// Throws InvalidArgument naming the offending field.
void validate(const ExperimentConfig& cfg);

/// Sets one field from its textual form. Keys: lambda1, lambda2, omega,
/// alpha ("re" or "re,im"), nmax ("auto" or integer), sectors (full|truncated),
/// solver (exact|rk4), dt, tmax, dtau_out, observables (comma list),
/// out_dir, format (csv|json), plot (true|false).
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Applies a flat JSON object whose keys are the apply_setting keys.
void apply_config_json(ExperimentConfig& cfg, const std::string& json_text);

/// Output times k * dtau_out for k = 0..floor(tau_max / dtau_out).
std::vector<double> time_grid(const ExperimentConfig& cfg);

/// Evolves the configured initial state and records every output time.
std::vector<ObservableRecord> simulate(const ExperimentConfig& cfg);

/// Selected columns of a simulation, tau first.
Series make_series(const ExperimentConfig& cfg, const std::vector<ObservableRecord>& records);

std::string describe(const ModelParams& mp);

struct RunOutput {
    std::filesystem::path series;
    std::vector<std::filesystem::path> plots;
    std::vector<ObservableRecord> records;
};

/// Writes <out_dir>/series.{csv,json} and, with plot set, one
/// series_<column>.svg per selected observable.
RunOutput run(const ExperimentConfig& cfg);

struct SweepSpec {
    std::string parameter;  ///< lambda1 | lambda2 | omega | alpha
    std::vector<double> values;
    ExperimentConfig base;
};

/// Parses "<param>=<v1,v2,...>" or "<param>=<start>:<stop>:<count>".
SweepSpec parse_sweep(std::string_view text, const ExperimentConfig& base);

/// Copy of `base` with the swept parameter set to `value`.
ExperimentConfig sweep_point(const SweepSpec& spec, double value);

struct SweepEntry {
    double value;
    std::filesystem::path series;
    std::vector<std::filesystem::path> plots;
    double mean_entropy;
    double mean_g2;
    double max_concurrence;
};

/// One series file per value, named <param>_<value>.<ext>, then
/// manifest.json describing all of them.
std::vector<SweepEntry> sweep(const SweepSpec& spec);

}  // namespace jcm
