// SPDX-License-Identifier: Apache-2.0
//
// fris-secrecy: secrecy-rate optimization toolkit for fluid reconfigurable surfaces
// Copyright (C) 2026 The fris-secrecy authors
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

/* C interface to the FRIS secrecy toolkit.
 *
 * Objects are opaque handles created and destroyed through this API. Every fallible call
 * returns a fris_status; on failure fris_last_error() holds a message for the calling thread. */

#ifndef FRIS_H
#define FRIS_H

#include <stddef.h>
#include <stdint.h>

#if defined(FRIS_BUILDING_LIBRARY)
#define FRIS_API __attribute__((visibility("default")))
#else
#define FRIS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fris_status
{
    FRIS_OK = 0,
    FRIS_E_INVALID_ARGUMENT = 1,
    FRIS_E_DOMAIN = 2,
    FRIS_E_NOT_PSD = 3,
    FRIS_E_SINGULAR = 4,
    FRIS_E_INFEASIBLE = 5,
    FRIS_E_DEGENERATE = 6,
    FRIS_E_IO = 7,
    FRIS_E_PARSE = 8,
    FRIS_E_INTERNAL = 9
} fris_status;

typedef struct fris_config fris_config;
typedef struct fris_sweep fris_sweep;

typedef struct fris_record
{
    double sweep_value;
    uint64_t trial;
    const char *scheme; /* owned by the library, static lifetime */
    double secrecy_rate;
    double objective_ratio;
    uint64_t ao_iters;
    double wall_ms;
    uint64_t seed;
} fris_record;

typedef struct fris_summary_row
{
    double sweep_value;
    const char *scheme;
    double mean;
    double std_error;
    uint64_t count;
} fris_summary_row;

typedef void (*fris_selftest_callback)(const char *name, int passed, const char *detail, void *user);

FRIS_API const char *fris_version(void);
FRIS_API const char *fris_status_string(fris_status status);
FRIS_API const char *fris_last_error(void);

/* Configuration: defaults are the reference scenario; keys follow the key = value file format */
FRIS_API fris_status fris_config_create(fris_config **out);
FRIS_API void fris_config_destroy(fris_config *config);
FRIS_API fris_status fris_config_set(fris_config *config, const char *key, const char *value);
/* Copies the value into buf (NUL-terminated, truncated to buflen); *needed receives the full length + 1 */
FRIS_API fris_status fris_config_get(const fris_config *config, const char *key, char *buf, size_t buflen,
                                     size_t *needed);
FRIS_API fris_status fris_config_load_file(fris_config *config, const char *path);
/* Replaces the whole configuration with a preset sweep: "fig2", "fig3", "fig4" or "fig5" */
FRIS_API fris_status fris_config_apply_preset(fris_config *config, const char *name);

/* threads = 0 uses every hardware thread */
FRIS_API fris_status fris_run_sweep(const fris_config *config, unsigned threads, fris_sweep **out);
FRIS_API void fris_sweep_destroy(fris_sweep *sweep);
FRIS_API const char *fris_sweep_variable(const fris_sweep *sweep);
FRIS_API size_t fris_sweep_record_count(const fris_sweep *sweep);
FRIS_API fris_status fris_sweep_record(const fris_sweep *sweep, size_t index, fris_record *out);
FRIS_API size_t fris_sweep_summary_count(const fris_sweep *sweep);
FRIS_API fris_status fris_sweep_summary(const fris_sweep *sweep, size_t index, fris_summary_row *out);
FRIS_API size_t fris_sweep_error_count(const fris_sweep *sweep);
/* *message stays valid until the sweep is destroyed */
FRIS_API fris_status fris_sweep_error(const fris_sweep *sweep, size_t index, double *sweep_value,
                                      const char **message);
FRIS_API fris_status fris_sweep_write_csv(const fris_sweep *sweep, const char *path);

/* Runs the small-instance oracle suite; *failures receives the number of failed checks */
FRIS_API fris_status fris_selftest(fris_selftest_callback callback, void *user, int *failures);

/* Scalar kernels */
FRIS_API fris_status fris_bessel_j0(double x, double *out);
FRIS_API fris_status fris_secrecy_rate(double gamma_bob, double gamma_eve, double *out);

#ifdef __cplusplus
}
#endif

#endif
