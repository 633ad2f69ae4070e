#include "jcm/jcm.h"

#include <exception>
#include <new>
#include <string>

#include "core/dynamics.hpp"
#include "core/errors.hpp"
#include "core/fockstate.hpp"
#include "core/harness.hpp"
#include "core/observables.hpp"
#include "core/series_io.hpp"
#include "core/svg.hpp"

struct jcm_config {
    jcm::ExperimentConfig cfg;
};

struct jcm_simulation {
    jcm::SystemState initial;
    jcm::EvolutionPlan plan;
};

namespace {

thread_local std::string g_last_error;

jcm_status fail(jcm_status code, const char* what)
{
    g_last_error = what;
    return code;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
jcm_status guarded(F&& body)
{
    try {
        body();
        g_last_error.clear();
        return JCM_OK;
    } catch (const jcm::InvalidArgument& e) {
        return fail(JCM_ERR_INVALID_CONFIG, e.what());
    } catch (const jcm::IoError& e) {
        return fail(JCM_ERR_IO, e.what());
    } catch (const jcm::NumericalError& e) {
        return fail(JCM_ERR_NUMERICAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(JCM_ERR_NUMERICAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(JCM_ERR_NUMERICAL, e.what());
    } catch (...) {
        return fail(JCM_ERR_NUMERICAL, "unknown error");
    }
}

jcm_status null_argument(const char* name)
{
    return fail(JCM_ERR_INVALID_CONFIG, (std::string("null argument: ") + name).c_str());
}

}  // namespace

extern "C" {

const char* jcm_last_error(void)
{
    return g_last_error.c_str();
}

const char* jcm_version(void)
{
    return "1.0.0";
}

jcm_status jcm_config_create(jcm_config** out)
{
    if (!out) return null_argument("out");
    return guarded([&] { *out = new jcm_config{}; });
}

void jcm_config_destroy(jcm_config* cfg)
{
    delete cfg;
}

jcm_status jcm_config_set(jcm_config* cfg, const char* key, const char* value)
{
    if (!cfg) return null_argument("cfg");
    if (!key) return null_argument("key");
    if (!value) return null_argument("value");
    return guarded([&] { jcm::apply_setting(cfg->cfg, key, value); });
}

jcm_status jcm_config_load_json(jcm_config* cfg, const char* path)
{
    if (!cfg) return null_argument("cfg");
    if (!path) return null_argument("path");
    return guarded([&] {
        jcm::ExperimentConfig next = cfg->cfg;
        jcm::apply_config_json(next, jcm::read_text(path));
        cfg->cfg = std::move(next);
    });
}

jcm_status jcm_config_validate(const jcm_config* cfg)
{
    if (!cfg) return null_argument("cfg");
    return guarded([&] { jcm::validate(cfg->cfg); });
}

jcm_status jcm_config_effective_nmax(const jcm_config* cfg, int* out)
{
    if (!cfg) return null_argument("cfg");
    if (!out) return null_argument("out");
    return guarded([&] {
        jcm::validate(cfg->cfg.model);
        *out = jcm::effective_n_max(cfg->cfg.model);
    });
}

jcm_status jcm_run(const jcm_config* cfg)
{
    if (!cfg) return null_argument("cfg");
    return guarded([&] { jcm::run(cfg->cfg); });
}

jcm_status jcm_sweep(const jcm_config* cfg, const char* sweep)
{
    if (!cfg) return null_argument("cfg");
    if (!sweep) return null_argument("sweep");
    return guarded([&] {
        jcm::validate(cfg->cfg);
        jcm::sweep(jcm::parse_sweep(sweep, cfg->cfg));
    });
}

jcm_status jcm_render(const char* series_path, const char* observable, const char* svg_path,
                      const char* title)
{
    if (!series_path) return null_argument("series_path");
    if (!observable) return null_argument("observable");
    if (!svg_path) return null_argument("svg_path");
    return guarded([&] {
        const std::string t = title ? title : std::filesystem::path(series_path).stem().string();
        jcm::render_file(series_path, observable, svg_path, t);
    });
}

jcm_status jcm_simulation_create(const jcm_config* cfg, jcm_simulation** out)
{
    if (!cfg) return null_argument("cfg");
    if (!out) return null_argument("out");
    return guarded([&] {
        jcm::validate(cfg->cfg.model);
        auto initial = jcm::initial_state(cfg->cfg.model);
        auto p = jcm::plan(cfg->cfg.model);
        *out = new jcm_simulation{std::move(initial), std::move(p)};
    });
}

void jcm_simulation_destroy(jcm_simulation* sim)
{
    delete sim;
}

jcm_status jcm_simulation_record(const jcm_simulation* sim, double tau, jcm_record* out)
{
    if (!sim) return null_argument("sim");
    if (!out) return null_argument("out");
    return guarded([&] {
        const jcm::ObservableRecord r = jcm::record(jcm::evolve_exact(sim->initial, sim->plan, tau));
        *out = {r.tau, r.entropy, r.concurrence, r.inversion, r.g2, r.norm, r.excitation};
    });
}

jcm_status jcm_simulation_dimensions(const jcm_simulation* sim, size_t* sectors, size_t* dimension)
{
    if (!sim) return null_argument("sim");
    return guarded([&] {
        if (sectors) *sectors = sim->initial.sectors.size();
        if (dimension) {
            size_t d = 0;
            for (const auto& s : sim->initial.sectors) d += s.amplitudes.size();
            *dimension = d;
        }
    });
}

}  // extern "C"
