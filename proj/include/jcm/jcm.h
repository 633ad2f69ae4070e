/*
 * jcm: coherent-state dynamics of the Dirac-Moshinsky oscillator with an
 * isospin field, mapped onto a generalized Jaynes-Cummings model.
 *
 * Plain C interface over the C++ simulation core. All objects are opaque
 * handles; every fallible call returns a jcm_status and leaves a message
 * retrievable through jcm_last_error() on the calling thread.
 */
#ifndef JCM_JCM_H
#define JCM_JCM_H

#include <stddef.h>

#if defined(JCM_BUILDING_LIBRARY)
#  define JCM_API __attribute__((visibility("default")))
#else
#  define JCM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as process exit codes of the command line tool. */
typedef enum jcm_status {
    JCM_OK = 0,
    JCM_ERR_INVALID_CONFIG = 1,
    JCM_ERR_NUMERICAL = 2,
    JCM_ERR_IO = 3
} jcm_status;

typedef struct jcm_config jcm_config;
typedef struct jcm_simulation jcm_simulation;

/* One time sample. entropy is in nats. */
typedef struct jcm_record {
    double tau;
    double entropy;
    double concurrence;
    double inversion;
    double g2;
    double norm;
    double excitation;
} jcm_record;

/* Message of the last failed call on this thread ("" if none). */
JCM_API const char* jcm_last_error(void);

JCM_API const char* jcm_version(void);

/* Configuration. Defaults: alpha = 3, omega = 0.2, lambda1 = lambda2 = 0.3,
 * nmax auto, full sectors, exact solver, tmax = 100, dtau_out = 0.05, all
 * observables, out_dir ".", csv, no plots. */
JCM_API jcm_status jcm_config_create(jcm_config** out);
JCM_API void jcm_config_destroy(jcm_config* cfg);

/* Sets one field from text. Keys: lambda1, lambda2, omega, alpha ("re" or
 * "re,im"), nmax ("auto" or integer), sectors (full|truncated), solver
 * (exact|rk4), dt, tmax, dtau_out, observables (comma list of S, C, W, g2,
 * norm, excitation), out_dir, format (csv|json), plot (true|false). */
JCM_API jcm_status jcm_config_set(jcm_config* cfg, const char* key, const char* value);

/* Applies a flat JSON object with the same keys. */
JCM_API jcm_status jcm_config_load_json(jcm_config* cfg, const char* path);

JCM_API jcm_status jcm_config_validate(const jcm_config* cfg);

/* Truncation index that a run with this configuration uses. */
JCM_API jcm_status jcm_config_effective_nmax(const jcm_config* cfg, int* out);

/* Writes <out_dir>/series.{csv,json} (and SVG plots if enabled). */
JCM_API jcm_status jcm_run(const jcm_config* cfg);

/* sweep: "<param>=<v1,v2,...>" or "<param>=<start>:<stop>:<count>", param
 * one of lambda1, lambda2, omega, alpha. Writes one series per value plus
 * <out_dir>/manifest.json. */
JCM_API jcm_status jcm_sweep(const jcm_config* cfg, const char* sweep);

/* Renders one column of a series file as a standalone SVG. title may be
 * NULL. */
JCM_API jcm_status jcm_render(const char* series_path, const char* observable,
                              const char* svg_path, const char* title);

/* Exact-propagator simulation of a configuration, sampled on demand. */
JCM_API jcm_status jcm_simulation_create(const jcm_config* cfg, jcm_simulation** out);
JCM_API void jcm_simulation_destroy(jcm_simulation* sim);
JCM_API jcm_status jcm_simulation_record(const jcm_simulation* sim, double tau, jcm_record* out);

/* Number of sectors and total basis dimension of the simulated state. */
JCM_API jcm_status jcm_simulation_dimensions(const jcm_simulation* sim, size_t* sectors,
                                             size_t* dimension);

#ifdef __cplusplus
}
#endif

#endif /* JCM_JCM_H */
