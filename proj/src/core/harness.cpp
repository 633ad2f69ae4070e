#include "core/harness.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

#include <fmt/format.h>
#include <json.hpp>

#include "core/dynamics.hpp"
#include "core/errors.hpp"
#include "core/fockstate.hpp"
#include "core/svg.hpp"

namespace jcm {

namespace {

constexpr Observable kAll[] = {Observable::Entropy, Observable::Concurrence, Observable::Inversion,
                               Observable::G2,      Observable::Norm,        Observable::Excitation};

double value_of(const ObservableRecord& r, Observable o)
{
    switch (o) {
        case Observable::Entropy: return r.entropy;
        case Observable::Concurrence: return r.concurrence;
        case Observable::Inversion: return r.inversion;
        case Observable::G2: return r.g2;
        case Observable::Norm: return r.norm;
        case Observable::Excitation: return r.excitation;
    }
    return 0.0;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view key, std::string_view text)
{
    text = trim(text);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw InvalidArgument(fmt::format("{}: '{}' is not a finite number", key, text));
    return v;
}

long parse_integer(std::string_view key, std::string_view text)
{
    text = trim(text);
    long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw InvalidArgument(fmt::format("{}: '{}' is not an integer", key, text));
    return v;
}

std::vector<std::string_view> split_list(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(trim(text.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

Observable parse_observable(std::string_view name)
{
    if (name == "S" || name == "entropy") return Observable::Entropy;
    if (name == "C" || name == "concurrence") return Observable::Concurrence;
    if (name == "W" || name == "inversion") return Observable::Inversion;
    if (name == "g2") return Observable::G2;
    if (name == "norm") return Observable::Norm;
    if (name == "excitation") return Observable::Excitation;
    throw InvalidArgument(fmt::format("observables: unknown observable '{}'", name));
}

std::string_view policy_name(SectorPolicy p)
{
    return p == SectorPolicy::FullSectors ? "full" : "truncated";
}

nlohmann::json params_json(const ExperimentConfig& cfg)
{
    const ModelParams& mp = cfg.model;
    return {
        {"lambda1", mp.lambda1},
        {"lambda2", mp.lambda2},
        {"omega", mp.detuning},
        {"alpha", {mp.alpha.real(), mp.alpha.imag()}},
        {"nmax", effective_n_max(mp)},
        {"sectors", policy_name(mp.policy)},
        {"solver", cfg.solver == Solver::Exact ? "exact" : "rk4"},
        {"dt", cfg.dt},
        {"tmax", cfg.tau_max},
        {"dtau_out", cfg.dtau_out},
    };
}

void ensure_directory(const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw IoError(fmt::format("cannot create output directory '{}'", dir.string()));
}

std::string extension(OutputFormat f)
{
    return f == OutputFormat::Csv ? ".csv" : ".json";
}

// Writes the series file and optional plots under `stem`.
RunOutput write_outputs(const ExperimentConfig& cfg, std::vector<ObservableRecord> records,
                        const std::string& stem)
{
    ensure_directory(cfg.out_dir);
    RunOutput out;
    Series series = make_series(cfg, records);
    out.series = cfg.out_dir / (stem + extension(cfg.format));
    write_text(out.series, cfg.format == OutputFormat::Csv ? to_csv(series) : to_json(series));
    if (cfg.plot) {
        const std::string title = describe(cfg.model);
        for (Observable o : cfg.observables) {
            const std::string column(column_name(o));
            auto path = cfg.out_dir / fmt::format("{}_{}.svg", stem, column);
            write_text(path, render_svg(series, column, title));
            out.plots.push_back(std::move(path));
        }
    }
    out.records = std::move(records);
    return out;
}

}  // namespace

std::string_view column_name(Observable o)
{
    switch (o) {
        case Observable::Entropy: return "S";
        case Observable::Concurrence: return "C";
        case Observable::Inversion: return "W";
        case Observable::G2: return "g2";
        case Observable::Norm: return "norm";
        case Observable::Excitation: return "excitation";
    }
    return "";
}

std::vector<Observable> all_observables()
{
    return {std::begin(kAll), std::end(kAll)};
}

void validate(const ExperimentConfig& cfg)
{
    validate(cfg.model);
    if (!(cfg.tau_max > 0.0) || !std::isfinite(cfg.tau_max))
        throw InvalidArgument("tmax must be > 0");
    if (!(cfg.dtau_out > 0.0) || !std::isfinite(cfg.dtau_out))
        throw InvalidArgument("dtau_out must be > 0");
    if (cfg.solver == Solver::Rk4 && !(cfg.dt > 0.0))
        throw InvalidArgument("dt must be > 0 for the rk4 solver");
    if (cfg.observables.empty()) throw InvalidArgument("observables must not be empty");
    if (cfg.tau_max / cfg.dtau_out > 1e7) throw InvalidArgument("dtau_out: too many output samples");
}

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value)
{
    value = trim(value);
    if (key == "lambda1") {
        cfg.model.lambda1 = parse_real(key, value);
    } else if (key == "lambda2") {
        cfg.model.lambda2 = parse_real(key, value);
    } else if (key == "omega") {
        cfg.model.detuning = parse_real(key, value);
    } else if (key == "alpha") {
        const auto parts = split_list(value, ',');
        if (parts.size() > 2) throw InvalidArgument("alpha: expected 're' or 're,im'");
        cfg.model.alpha = {parse_real(key, parts[0]),
                           parts.size() == 2 ? parse_real(key, parts[1]) : 0.0};
    } else if (key == "nmax") {
        if (value == "auto") {
            cfg.model.n_max.reset();
        } else {
            const long n = parse_integer(key, value);
            if (n < 0 || n > 100000) throw InvalidArgument("nmax: must be in [0, 100000]");
            cfg.model.n_max = static_cast<int>(n);
        }
    } else if (key == "sectors") {
        if (value == "full") cfg.model.policy = SectorPolicy::FullSectors;
        else if (value == "truncated") cfg.model.policy = SectorPolicy::TruncatedAnsatz;
        else throw InvalidArgument(fmt::format("sectors: expected full|truncated, got '{}'", value));
    } else if (key == "solver") {
        if (value == "exact") cfg.solver = Solver::Exact;
        else if (value == "rk4") cfg.solver = Solver::Rk4;
        else throw InvalidArgument(fmt::format("solver: expected exact|rk4, got '{}'", value));
    } else if (key == "dt") {
        cfg.dt = parse_real(key, value);
    } else if (key == "tmax") {
        cfg.tau_max = parse_real(key, value);
    } else if (key == "dtau_out" || key == "dtau-out") {
        cfg.dtau_out = parse_real(key, value);
    } else if (key == "observables") {
        std::vector<Observable> chosen;
        if (!value.empty())
            for (auto name : split_list(value, ',')) chosen.push_back(parse_observable(name));
        // Fixed column order, duplicates collapsed.
        std::vector<Observable> ordered;
        for (Observable o : kAll)
            if (std::find(chosen.begin(), chosen.end(), o) != chosen.end()) ordered.push_back(o);
        cfg.observables = std::move(ordered);
    } else if (key == "out_dir" || key == "out-dir") {
        if (value.empty()) throw InvalidArgument("out_dir: must not be empty");
        cfg.out_dir = std::filesystem::path(std::string(value));
    } else if (key == "format") {
        if (value == "csv") cfg.format = OutputFormat::Csv;
        else if (value == "json") cfg.format = OutputFormat::Json;
        else throw InvalidArgument(fmt::format("format: expected csv|json, got '{}'", value));
    } else if (key == "plot") {
        if (value == "true" || value == "1") cfg.plot = true;
        else if (value == "false" || value == "0") cfg.plot = false;
        else throw InvalidArgument(fmt::format("plot: expected true|false, got '{}'", value));
    } else {
        throw InvalidArgument(fmt::format("unknown configuration field '{}'", key));
    }
}

void apply_config_json(ExperimentConfig& cfg, const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(fmt::format("config: not valid JSON ({})", e.what()));
    }
    if (!j.is_object()) throw InvalidArgument("config: expected a flat JSON object");
    for (const auto& [key, v] : j.items()) {
        std::string text;
        if (v.is_string()) {
            text = v.get<std::string>();
        } else if (v.is_number() || v.is_boolean()) {
            text = v.dump();
        } else if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) text += ',';
                text += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
            }
        } else {
            throw InvalidArgument(fmt::format("{}: unsupported value type", key));
        }
        apply_setting(cfg, key, text);
    }
}

std::vector<double> time_grid(const ExperimentConfig& cfg)
{
    const auto last = static_cast<long>(std::floor(cfg.tau_max / cfg.dtau_out + 1e-9));
    std::vector<double> taus(static_cast<std::size_t>(last) + 1);
    for (long k = 0; k <= last; ++k) taus[k] = static_cast<double>(k) * cfg.dtau_out;
    return taus;
}

std::vector<ObservableRecord> simulate(const ExperimentConfig& cfg)
{
    validate(cfg);
    const auto taus = time_grid(cfg);
    const SystemState s0 = initial_state(cfg.model);

    std::vector<ObservableRecord> records;
    records.reserve(taus.size());
    if (cfg.solver == Solver::Exact) {
        const EvolutionPlan p = plan(cfg.model, taus);
        for (double tau : taus) records.push_back(record(evolve_exact(s0, p, tau)));
    } else {
        SystemState s = s0;
        records.push_back(record(s));
        for (std::size_t k = 1; k < taus.size(); ++k) {
            s = evolve_rk4(s, cfg.model, taus[k] - taus[k - 1], cfg.dt);
            s.tau = taus[k];
            records.push_back(record(s));
        }
    }
    return records;
}

Series make_series(const ExperimentConfig& cfg, const std::vector<ObservableRecord>& records)
{
    Series s;
    s.columns.emplace_back("tau");
    for (Observable o : cfg.observables) s.columns.emplace_back(column_name(o));
    s.params = params_json(cfg);
    s.rows.reserve(records.size());
    for (const auto& r : records) {
        std::vector<double> row{r.tau};
        for (Observable o : cfg.observables) row.push_back(value_of(r, o));
        s.rows.push_back(std::move(row));
    }
    return s;
}

std::string describe(const ModelParams& mp)
{
    std::string alpha = mp.alpha.imag() == 0.0
                            ? fmt::format("{}", mp.alpha.real())
                            : fmt::format("{}{:+}i", mp.alpha.real(), mp.alpha.imag());
    return fmt::format("α={}, Ω={}λ, λ₁={}λ, λ₂={}λ, nmax={}, {} sectors", alpha, mp.detuning,
                       mp.lambda1, mp.lambda2, effective_n_max(mp), policy_name(mp.policy));
}

RunOutput run(const ExperimentConfig& cfg)
{
    return write_outputs(cfg, simulate(cfg), "series");
}

SweepSpec parse_sweep(std::string_view text, const ExperimentConfig& base)
{
    const auto eq = text.find('=');
    if (eq == std::string_view::npos)
        throw InvalidArgument("sweep: expected <param>=<values>");
    SweepSpec spec;
    spec.parameter = std::string(trim(text.substr(0, eq)));
    spec.base = base;
    if (spec.parameter != "lambda1" && spec.parameter != "lambda2" && spec.parameter != "omega" &&
        spec.parameter != "alpha")
        throw InvalidArgument(fmt::format("sweep: unknown parameter '{}'", spec.parameter));

    const std::string_view rhs = trim(text.substr(eq + 1));
    if (rhs.find(':') != std::string_view::npos) {
        const auto parts = split_list(rhs, ':');
        if (parts.size() != 3) throw InvalidArgument("sweep: range must be start:stop:count");
        const double start = parse_real("sweep", parts[0]);
        const double stop = parse_real("sweep", parts[1]);
        const long count = parse_integer("sweep", parts[2]);
        if (count < 1 || count > 10000) throw InvalidArgument("sweep: count must be in [1, 10000]");
        for (long i = 0; i < count; ++i)
            spec.values.push_back(count == 1 ? start
                                             : start + (stop - start) * static_cast<double>(i) /
                                                           static_cast<double>(count - 1));
    } else {
        for (auto v : split_list(rhs, ',')) spec.values.push_back(parse_real("sweep", v));
    }
    if (spec.values.empty()) throw InvalidArgument("sweep: no values");

    std::set<std::string> names;
    for (double v : spec.values) {
        if (!names.insert(fmt::format("{}", v)).second)
            throw InvalidArgument(fmt::format("sweep: duplicate value {}", v));
        validate(sweep_point(spec, v));
    }
    return spec;
}

ExperimentConfig sweep_point(const SweepSpec& spec, double value)
{
    ExperimentConfig cfg = spec.base;
    if (spec.parameter == "lambda1") cfg.model.lambda1 = value;
    else if (spec.parameter == "lambda2") cfg.model.lambda2 = value;
    else if (spec.parameter == "omega") cfg.model.detuning = value;
    else if (spec.parameter == "alpha") cfg.model.alpha = {value, 0.0};
    else throw InvalidArgument(fmt::format("sweep: unknown parameter '{}'", spec.parameter));
    return cfg;
}

std::vector<SweepEntry> sweep(const SweepSpec& spec)
{
    if (spec.values.empty()) throw InvalidArgument("sweep: no values");
    std::vector<SweepEntry> entries;
    nlohmann::json manifest_entries = nlohmann::json::array();
    for (double value : spec.values) {
        const ExperimentConfig cfg = sweep_point(spec, value);
        RunOutput out = write_outputs(cfg, simulate(cfg),
                                      fmt::format("{}_{}", spec.parameter, value));

        SweepEntry e{value, out.series, out.plots, 0.0, 0.0, 0.0};
        for (const auto& r : out.records) {
            e.mean_entropy += r.entropy;
            e.mean_g2 += r.g2;
            e.max_concurrence = std::max(e.max_concurrence, r.concurrence);
        }
        e.mean_entropy /= static_cast<double>(out.records.size());
        e.mean_g2 /= static_cast<double>(out.records.size());

        nlohmann::json plots = nlohmann::json::array();
        for (const auto& p : e.plots) plots.push_back(p.filename().string());
        manifest_entries.push_back({{"value", value},
                                    {"file", e.series.filename().string()},
                                    {"plots", plots},
                                    {"mean_S", e.mean_entropy},
                                    {"mean_g2", e.mean_g2},
                                    {"max_C", e.max_concurrence}});
        entries.push_back(std::move(e));
    }

    nlohmann::json manifest = {{"parameter", spec.parameter},
                               {"base", params_json(spec.base)},
                               {"entries", manifest_entries}};
    write_text(spec.base.out_dir / "manifest.json", manifest.dump(2) + "\n");
    return entries;
}

}  // namespace jcm
