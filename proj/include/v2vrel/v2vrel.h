// Copyright 2026 The v2vrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
/*
 * C interface to the v2vrel intersection reliability toolkit.
 *
 * Objects are opaque handles created by v2v_*_create / v2v_run_* and released
 * with the matching *_destroy function. Every fallible call returns a
 * v2v_status; on failure a description is available from v2v_last_error() on
 * the calling thread until its next failing call. Handles are not synchronised:
 * use one handle per thread or serialise access.
 */
#ifndef V2VREL_H
#define V2VREL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(V2VREL_BUILDING_LIBRARY)
#define V2VREL_API __declspec(dllexport)
#else
#define V2VREL_API __declspec(dllimport)
#endif
#else
#define V2VREL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum v2v_status
{
    V2V_OK = 0,
    V2V_ERR_INVALID_ARGUMENT = 1, /* null handle or pointer, bad enum value */
    V2V_ERR_DOMAIN = 2,           /* value outside the model's domain */
    V2V_ERR_NUMERICAL = 3,        /* quadrature did not converge */
    V2V_ERR_CONFIG = 4,           /* unknown key or unparsable value */
    V2V_ERR_FIT = 5,              /* Beta fit unavailable */
    V2V_ERR_IO = 6,               /* file could not be read or written */
    V2V_ERR_INFEASIBLE = 7,       /* target cannot be met even without interference */
    V2V_ERR_INTERNAL = 99
} v2v_status;

typedef enum v2v_road
{
    V2V_ROAD_HORIZONTAL = 0,
    V2V_ROAD_VERTICAL = 1
} v2v_road;

typedef enum v2v_link_class
{
    V2V_LINK_LOS = 0,
    V2V_LINK_WLOS = 1,
    V2V_LINK_NLOS = 2
} v2v_link_class;

typedef enum v2v_pi_status
{
    V2V_PI_CONSTRAINED = 0,
    V2V_PI_UNCONSTRAINED = 1,
    V2V_PI_INFEASIBLE = 2
} v2v_pi_status;

typedef struct v2v_config v2v_config;
typedef struct v2v_sweep v2v_sweep;
typedef struct v2v_meta v2v_meta;
typedef struct v2v_validation v2v_validation;

typedef struct v2v_run_options
{
    uint64_t realizations;
    uint64_t seed;
    unsigned threads; /* 0 selects the hardware concurrency */
} v2v_run_options;

typedef struct v2v_average
{
    double value;
    double noise_factor;
    double laplace_x;
    double laplace_y;
} v2v_average;

typedef struct v2v_pi_result
{
    double value;
    v2v_pi_status status;
    double achieved; /* average success at value */
} v2v_pi_result;

typedef struct v2v_sweep_row
{
    double separation_m;
    v2v_road tx_road;
    double tx_offset_m;
    v2v_link_class link_class;
    double avg_success_analytic;
    double avg_success_empirical;
    double meta_at_avg;
    uint64_t n_realizations;
} v2v_sweep_row;

typedef struct v2v_meta_summary
{
    double separation_m;
    uint64_t n_realizations;
    double avg_success_analytic;
    double mean;
    double variance;
    int fit_ok; /* beta_a / beta_b are NaN when 0 */
    double beta_a;
    double beta_b;
} v2v_meta_summary;

V2VREL_API const char *v2v_version(void);
V2VREL_API const char *v2v_status_string(v2v_status status);
V2VREL_API const char *v2v_last_error(void);

/* ---- configuration ---------------------------------------------------- */

/* Empty configuration: urban reference intersection, R = 200 m, p_I = auto. */
V2VREL_API v2v_status v2v_config_create(v2v_config **out);
V2VREL_API void v2v_config_destroy(v2v_config *config);

/* Later calls override earlier ones, so apply file values before flag values. */
V2VREL_API v2v_status v2v_config_set(v2v_config *config, const char *key, const char *value);
V2VREL_API v2v_status v2v_config_load_file(v2v_config *config, const char *path);

/* Resolved scenario value for a numeric key; p_I = auto is solved first. */
V2VREL_API v2v_status v2v_config_value(const v2v_config *config, const char *key, double *out);

/* ---- analytic --------------------------------------------------------- */

/* Largest p_I meeting the configured target at the design position. */
V2VREL_API v2v_status v2v_solve_optimal_pi(const v2v_config *config, v2v_pi_result *out);

V2VREL_API v2v_status v2v_average_success(const v2v_config *config, v2v_road tx_road, double tx_offset_m,
                                          v2v_average *out);

/* ---- separation sweep ------------------------------------------------- */

V2VREL_API v2v_status v2v_run_sweep(const v2v_config *config, double min_m, double step_m, double max_m,
                                    const v2v_run_options *options, v2v_sweep **out);
V2VREL_API void v2v_sweep_destroy(v2v_sweep *sweep);
V2VREL_API size_t v2v_sweep_size(const v2v_sweep *sweep);
V2VREL_API v2v_status v2v_sweep_row_at(const v2v_sweep *sweep, size_t index, v2v_sweep_row *out);
/* Conditional success samples of one separation; the array is owned by the handle. */
V2VREL_API v2v_status v2v_sweep_samples(const v2v_sweep *sweep, size_t index, const double **data, size_t *count);
V2VREL_API v2v_status v2v_sweep_write_csv(const v2v_sweep *sweep, const char *path);
V2VREL_API v2v_status v2v_sweep_write_scatter_csv(const v2v_sweep *sweep, const char *path);

/* ---- meta distribution ------------------------------------------------ */

V2VREL_API v2v_status v2v_run_meta_study(const v2v_config *config, double separation_m, const v2v_run_options *options,
                                         v2v_meta **out);
V2VREL_API void v2v_meta_destroy(v2v_meta *meta);
V2VREL_API v2v_status v2v_meta_get_summary(const v2v_meta *meta, v2v_meta_summary *out);
/* Fraction of realizations with conditional success >= p, empirical and Beta. */
V2VREL_API v2v_status v2v_meta_cdf(const v2v_meta *meta, double p, double *empirical, double *beta_approx);
/* Fraction of samples with conditional outage in [low, high]. */
V2VREL_API v2v_status v2v_meta_bimodality_gap(const v2v_meta *meta, double low, double high, double *out);
V2VREL_API v2v_status v2v_meta_samples(const v2v_meta *meta, const double **data, size_t *count);
V2VREL_API v2v_status v2v_meta_write_csv(const v2v_meta *meta, const char *path);
V2VREL_API v2v_status v2v_meta_write_summary_json(const v2v_meta *meta, const char *path);

/* ---- validation ------------------------------------------------------- */

V2VREL_API v2v_status v2v_run_validation(const v2v_config *config, uint64_t n_realizations, uint64_t n_fading,
                                         uint64_t seed, unsigned threads, v2v_validation **out);
V2VREL_API void v2v_validation_destroy(v2v_validation *validation);
V2VREL_API int v2v_validation_passed(const v2v_validation *validation);
/* Report text, owned by the handle. */
V2VREL_API const char *v2v_validation_text(const v2v_validation *validation);
V2VREL_API v2v_status v2v_validation_write(const v2v_validation *validation, const char *path);

#ifdef __cplusplus
}
#endif

#endif
