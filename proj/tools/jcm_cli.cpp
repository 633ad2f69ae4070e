// jcm-sim: command line front end over the jcm C API.
//
//   jcm-sim run    [model/output flags]
//   jcm-sim sweep  --sweep lambda1=0.2,0.5,0.8,1.2 [flags]
//   jcm-sim render <series file> <column> [--out file.svg] [--title text]
//
// Exit codes: 0 success, 1 invalid config, 2 numerical error, 3 I/O error.

#include <cstdio>
#include <deque>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "jcm/jcm.h"

namespace {

struct ConfigDeleter {
    void operator()(jcm_config* c) const { jcm_config_destroy(c); }
};
using ConfigPtr = std::unique_ptr<jcm_config, ConfigDeleter>;

// Flag values kept as text and handed to jcm_config_set verbatim, so the
// library does all parsing and validation.
struct ModelFlags {
    std::deque<std::pair<std::string, std::string>> values;  // key, text; stable addresses
    std::vector<std::pair<std::string, CLI::Option*>> options;
    std::string config_file;
    bool plot = false;
    CLI::Option* plot_opt = nullptr;
    CLI::Option* config_opt = nullptr;

    void add(CLI::App& app, const std::string& flag, const std::string& key, const std::string& help)
    {
        values.emplace_back(key, std::string{});
        options.emplace_back(key, nullptr);
        options.back().second = app.add_option(flag, values.back().second, help);
    }

    void attach(CLI::App& app)
    {
        add(app, "--lambda1", "lambda1", "Dirac-spin coupling in units of lambda");
        add(app, "--lambda2", "lambda2", "isospin coupling in units of lambda");
        add(app, "--omega", "omega", "detuning Omega = mc^2 = gamma in units of lambda");
        add(app, "--alpha", "alpha", "coherent amplitude, 're' or 're,im'");
        add(app, "--nmax", "nmax", "Fock truncation index or 'auto'");
        add(app, "--sectors", "sectors", "full|truncated");
        add(app, "--solver", "solver", "exact|rk4");
        add(app, "--dt", "dt", "RK4 step");
        add(app, "--tmax", "tmax", "final scaled time");
        add(app, "--dtau-out", "dtau_out", "output sampling interval");
        add(app, "--observables", "observables", "comma list of S,C,W,g2,norm,excitation");
        add(app, "--out-dir", "out_dir", "output directory");
        add(app, "--format", "format", "csv|json");
        plot_opt = app.add_flag("--plot", plot, "write one SVG plot per observable");
        config_opt = app.add_option("--config", config_file, "flat JSON config file");
    }

    // Config file first, then explicitly given flags on top.
    int apply(jcm_config* cfg) const
    {
        if (config_opt->count() > 0) {
            if (jcm_status st = jcm_config_load_json(cfg, config_file.c_str()); st != JCM_OK)
                return report(st);
        }
        for (std::size_t i = 0; i < options.size(); ++i) {
            if (options[i].second->count() == 0) continue;
            const auto& [key, text] = values[i];
            if (jcm_status st = jcm_config_set(cfg, key.c_str(), text.c_str()); st != JCM_OK)
                return report(st);
        }
        if (plot_opt->count() > 0) {
            if (jcm_status st = jcm_config_set(cfg, "plot", "true"); st != JCM_OK) return report(st);
        }
        if (jcm_status st = jcm_config_validate(cfg); st != JCM_OK) return report(st);
        return JCM_OK;
    }

    static int report(jcm_status st)
    {
        std::fprintf(stderr, "jcm-sim: %s\n", jcm_last_error());
        return static_cast<int>(st);
    }
};

ConfigPtr make_config()
{
    jcm_config* raw = nullptr;
    if (jcm_config_create(&raw) != JCM_OK) return nullptr;
    return ConfigPtr(raw);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized Jaynes-Cummings dynamics of the Dirac-Moshinsky oscillator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(jcm_version()));

    auto* run_cmd = app.add_subcommand("run", "evolve one configuration and write its time series");
    ModelFlags run_flags;
    run_flags.attach(*run_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "run one series per parameter value plus a manifest");
    ModelFlags sweep_flags;
    sweep_flags.attach(*sweep_cmd);
    std::string sweep_text;
    sweep_cmd->add_option("--sweep", sweep_text, "<param>=<v1,v2,...> or <param>=<start>:<stop>:<count>")
        ->required();

    auto* render_cmd = app.add_subcommand("render", "plot one column of a series file as SVG");
    std::string series_path, column, svg_path, title;
    render_cmd->add_option("series", series_path, "series file (.csv or .json)")->required();
    render_cmd->add_option("observable", column, "column name (S, C, W, g2, norm, excitation)")
        ->required();
    render_cmd->add_option("--out", svg_path, "output SVG (default: <series stem>_<column>.svg)");
    auto* title_opt = render_cmd->add_option("--title", title, "plot title");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return JCM_ERR_INVALID_CONFIG;
    }

    if (*render_cmd) {
        if (svg_path.empty()) {
            std::string stem = series_path;
            if (auto dot = stem.find_last_of('.'); dot != std::string::npos &&
                                                    stem.find_last_of('/') + 1 <= dot)
                stem.resize(dot);
            svg_path = stem + "_" + column + ".svg";
        }
        jcm_status st = jcm_render(series_path.c_str(), column.c_str(), svg_path.c_str(),
                                   title_opt->count() ? title.c_str() : nullptr);
        if (st != JCM_OK) return ModelFlags::report(st);
        std::printf("%s\n", svg_path.c_str());
        return 0;
    }

    ConfigPtr cfg = make_config();
    if (!cfg) return ModelFlags::report(JCM_ERR_NUMERICAL);

    if (*run_cmd) {
        if (int rc = run_flags.apply(cfg.get()); rc != 0) return rc;
        if (jcm_status st = jcm_run(cfg.get()); st != JCM_OK) return ModelFlags::report(st);
        return 0;
    }

    if (int rc = sweep_flags.apply(cfg.get()); rc != 0) return rc;
    if (jcm_status st = jcm_sweep(cfg.get(), sweep_text.c_str()); st != JCM_OK)
        return ModelFlags::report(st);
    return 0;
}
