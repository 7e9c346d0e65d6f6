// Copyright 2026 The entcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the entcap library. Every call returns an entcap_status;
 * on failure entcap_last_error() describes it (per thread). Strings returned
 * through char** are owned by the caller and released with
 * entcap_string_free. */

#ifndef ENTCAP_ENTCAP_H
#define ENTCAP_ENTCAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ENTCAP_API __declspec(dllexport)
#else
#define ENTCAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum entcap_status {
    ENTCAP_OK = 0,
    ENTCAP_ERR_INVALID_ARGUMENT = 1,
    ENTCAP_ERR_NUMERICAL = 2,
    ENTCAP_ERR_NO_SIGN_CHANGE = 3,
    ENTCAP_ERR_IO = 4,
    ENTCAP_ERR_LIMIT = 5,
    ENTCAP_ERR_INTERNAL = 6
} entcap_status;

typedef enum entcap_region {
    ENTCAP_REGION_ENTANGLED = 0,
    ENTCAP_REGION_SEPARABLE = 1,
    ENTCAP_REGION_BOUNDARY = 2
} entcap_region;

typedef struct entcap_config entcap_config;
typedef struct entcap_result entcap_result;

ENTCAP_API const char *entcap_version(void);
ENTCAP_API const char *entcap_status_name(entcap_status status);
/* Message of the last failed call on this thread, "" if none. */
ENTCAP_API const char *entcap_last_error(void);
ENTCAP_API void entcap_string_free(char *s);

/* --- configuration ------------------------------------------------------ */

/* scenario: ising-tunable, ising-untunable, xyz-tunable, xy-family,
 * ising-laplace, ising-untunable-laplace. */
ENTCAP_API entcap_status entcap_config_create(const char *scenario, entcap_config **out);
ENTCAP_API void entcap_config_destroy(entcap_config *config);
ENTCAP_API entcap_status entcap_config_clone(const entcap_config *config, entcap_config **out);

/* key: lambda, omega, capital-lambda, theta-minus, zbar, phi. The last three
 * apply to xyz-tunable only. */
ENTCAP_API entcap_status entcap_config_set(entcap_config *config, const char *key, double value);

/* kind: closed-form, quadrature (count = nodes), monte-carlo (count =
 * samples). count == 0 keeps the default. Quadrature counts are Gauss-Hermite
 * nodes (odd, default 61), or Gauss-Laguerre nodes per half-line (default 64)
 * for the Laplace scenarios. seed is used by monte-carlo. */
ENTCAP_API entcap_status entcap_config_set_method(entcap_config *config, const char *kind, uint64_t count,
                                                  uint64_t seed);

/* Refocusing schedule of the untunable scenarios. */
ENTCAP_API entcap_status entcap_config_set_refocus(entcap_config *config, double j_tau1, double j_tau2,
                                                   double pulse_angle);
/* mode: pulse-angle or duration. */
ENTCAP_API entcap_status entcap_config_set_refocus_noise(entcap_config *config, const char *mode);

ENTCAP_API entcap_status entcap_config_to_json(const entcap_config *config, char **json);

/* --- single point ---------------------------------------------------------- */

typedef struct entcap_verdict_info {
    double min_pt_eigenvalue;
    double negativity;
    int entangled;
    int indeterminate;
    entcap_region predicate_region;
    double predicate_margin;
    double initial_entropy_bits;
} entcap_verdict_info;

ENTCAP_API entcap_status entcap_run(const entcap_config *config, entcap_result **out);
ENTCAP_API void entcap_result_destroy(entcap_result *result);
ENTCAP_API entcap_status entcap_result_verdict(const entcap_result *result, entcap_verdict_info *out);
/* Final density matrix, row-major, 16 entries each. */
ENTCAP_API entcap_status entcap_result_state(const entcap_result *result, double re[16], double im[16]);
ENTCAP_API entcap_status entcap_result_json(const entcap_result *result, char **json);

/* --- boundary ------------------------------------------------------------- */

typedef struct entcap_boundary_info {
    double threshold;
    int has_closed_form;
    double closed_form;
    double deviation;
    int iterations;
} entcap_boundary_info;

/* axis: lambda or interaction (omega and capital-lambda are accepted).
 * Returns ENTCAP_ERR_NO_SIGN_CHANGE when the bracket ends agree. json may be
 * NULL. */
ENTCAP_API entcap_status entcap_boundary(const entcap_config *config, const char *axis, double lo, double hi,
                                         double tolerance, entcap_boundary_info *out, char **json);

/* --- sweep ---------------------------------------------------------------- */

typedef struct entcap_sweep_info {
    size_t rows;
    unsigned workers;
    double wall_ms;
} entcap_sweep_info;

/* axes: "name=start:stop:step" strings, first axis slowest. format: csv or
 * json. workers == 0 uses every hardware thread. A manifest is written to
 * "<path>.manifest.json". */
ENTCAP_API entcap_status entcap_sweep(const entcap_config *config, const char *const *axes, size_t n_axes,
                                      const char *path, const char *format, unsigned workers,
                                      entcap_sweep_info *out);

/* Re-runs the sweep recorded in a manifest file. */
ENTCAP_API entcap_status entcap_sweep_from_manifest(const char *manifest_path, const char *path,
                                                    const char *format, unsigned workers, entcap_sweep_info *out);

/* --- validation ----------------------------------------------------------- */

typedef struct entcap_validate_options {
    /* Random points when > 0, else a grid_points x grid_points grid. */
    size_t samples;
    size_t grid_points;
    uint64_t seed;
    double guard;
    double prep_lo, prep_hi;
    double interaction_lo, interaction_hi;
    double theta_minus_lo, theta_minus_hi;
    /* xy-family: Monte Carlo weight check. */
    size_t weight_samples;
    double weights_lambda, weights_omega, weight_tolerance;
} entcap_validate_options;

typedef struct entcap_validate_info {
    size_t points;
    size_t compared;
    size_t skipped;
    size_t disagreements;
    double max_disagreement_margin;
    int has_weight_deviation;
    double max_weight_deviation;
} entcap_validate_info;

ENTCAP_API void entcap_validate_options_default(entcap_validate_options *options);

/* Compares the closed-form criterion with the simulated verdict. The
 * scenario, averaging method, phi and refocus settings come from config.
 * json may be NULL. */
ENTCAP_API entcap_status entcap_validate(const entcap_config *config, const entcap_validate_options *options,
                                         entcap_validate_info *out, char **json);

/* --- closed-form criteria ------------------------------------------------- */

/* margin and region may each be NULL. */

ENTCAP_API entcap_status entcap_ising_gaussian(double lambda, double omega, double *margin, entcap_region *region);
ENTCAP_API entcap_status entcap_ising_lambda_max(double omega, double *out);
ENTCAP_API entcap_status entcap_untunable_ising(double lambda, double capital_lambda, double *margin,
                                                entcap_region *region);
ENTCAP_API entcap_status entcap_xyz_tunable(double a, double b, double z, double *margin, entcap_region *region);
ENTCAP_API entcap_status entcap_xy_family_weights(double lambda, double omega, double weights[3]);
ENTCAP_API entcap_status entcap_untunable_xyz_lhs(double mu, double eta, double delta, double *lhs);
ENTCAP_API entcap_status entcap_ising_laplace(double lambda, double omega, double *margin, entcap_region *region);
ENTCAP_API entcap_status entcap_laplace_lambda_bound(double omega, double *out);

#ifdef __cplusplus
}
#endif

#endif
