/* Copyright 2026 The collisionflux authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* collisionflux — steady-state heat transport through a three-qubit chain
 * coupled to hot/cold thermal ancilla streams and a structured environment,
 * simulated with a repeated-interaction (collision) protocol.
 *
 * C API of the shared library. All entry points are thread-safe as long as
 * each handle is used from one thread at a time. Strings returned by
 * cf_*_manifest_json are owned by their handle and live until the handle is
 * destroyed; the cf_last_error string is thread-local and valid until the
 * next failing call on the same thread.
 *
 * Configurations are JSON text. A run/spectrum config is a flat object of
 * model fields (omega, g12, g23, gh, gc, ga, gb, tc, Th, Tc, p — all
 * optional, with documented defaults) plus an optional "criterion" object
 * (rel_tol, window, max_rounds) and optional "stride". A sweep config is
 * {"base": <model object>, "axis1": {name,min,max,count},
 *  "axis2": {...}, "criterion": {...}}. A manifest.json written by any
 * execute call is itself accepted wherever a config is expected (its
 * embedded "config" object is used), so results can be reproduced from
 * their manifest alone. Unknown fields are rejected.
 */

#ifndef COLLISIONFLUX_H_
#define COLLISIONFLUX_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cf_status {
  CF_OK = 0,
  CF_ERR_INVALID = 1, /* null/invalid arguments, out-of-range index */
  CF_ERR_CONFIG = 2,  /* malformed JSON, unknown field, bad value */
  CF_ERR_IO = 3,      /* reserved for callers; the library does no file I/O */
  CF_ERR_NUMERIC = 4  /* state left the numerical-validity envelope */
} cf_status;

/* Library version string, e.g. "1.0.0". */
const char* cf_version(void);

/* Human-readable message for the most recent failure on this thread, or an
 * empty string if the last call succeeded. */
const char* cf_last_error(void);

/* ----- single run --------------------------------------------------- */

typedef struct cf_record {
  int64_t n;         /* 1-based round index */
  double dq_cold;    /* energy gained by the cold ancilla this round */
  double dq_hot;     /* energy lost by the hot ancilla this round */
  double dq_hse;     /* energy gained by the environment ancilla */
  double j;          /* dq_cold / tc */
  double e_register; /* register free energy after the round */
} cf_record;

typedef struct cf_run cf_run; /* opaque */

/* Parses, validates and executes a run to steady state (or max_rounds).
 * stride >= 1 thins the recorded trajectory (the final round is always
 * kept); stride <= 0 means "use the config's stride" (default 1). */
cf_status cf_run_execute(const char* config_json, int64_t stride,
                         cf_run** out);
void cf_run_destroy(cf_run* run);

int64_t cf_run_record_count(const cf_run* run);
cf_status cf_run_record_at(const cf_run* run, int64_t i, cf_record* out);
int cf_run_converged(const cf_run* run); /* 1 steady, 0 not converged */
int64_t cf_run_rounds(const cf_run* run);
double cf_run_jss(const cf_run* run);
const char* cf_run_manifest_json(cf_run* run);

/* ----- parameter sweep ----------------------------------------------- */

typedef struct cf_cell {
  double j_ss;       /* NaN if the cell errored */
  int32_t converged; /* 1 steady, 0 not converged or errored */
  int64_t rounds;
} cf_cell;

typedef struct cf_sweep cf_sweep; /* opaque */

/* workers <= 0 selects one worker per hardware thread. Results are
 * independent of the worker count. */
cf_status cf_sweep_execute(const char* config_json, int32_t workers,
                           cf_sweep** out);
void cf_sweep_destroy(cf_sweep* sweep);

int64_t cf_sweep_axis1_count(const cf_sweep* sweep);
int64_t cf_sweep_axis2_count(const cf_sweep* sweep);
cf_status cf_sweep_axis1_value(const cf_sweep* sweep, int64_t i, double* out);
cf_status cf_sweep_axis2_value(const cf_sweep* sweep, int64_t j, double* out);
cf_status cf_sweep_cell(const cf_sweep* sweep, int64_t i, int64_t j,
                        cf_cell* out);
const char* cf_sweep_manifest_json(cf_sweep* sweep);

/* ----- spectrum ------------------------------------------------------ */

typedef struct cf_spectrum cf_spectrum; /* opaque */

#define CF_SPECTRUM_BARE 0    /* 8 eigenvalues of the chain Hamiltonian */
#define CF_SPECTRUM_COUPLED 1 /* 16 eigenvalues incl. environment qubit */

cf_status cf_spectrum_execute(const char* config_json, cf_spectrum** out);
void cf_spectrum_destroy(cf_spectrum* spectrum);

int64_t cf_spectrum_count(const cf_spectrum* spectrum, int variant);
cf_status cf_spectrum_eigenvalue(const cf_spectrum* spectrum, int variant,
                                 int64_t i, double* out);
const char* cf_spectrum_manifest_json(cf_spectrum* spectrum);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COLLISIONFLUX_H_ */
