/* SPDX-License-Identifier: Apache-2.0
 *
 * irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
 * Copyright (C) 2026 the irsec authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * C interface to the irsec core. All functions return irsec_status; output
 * objects come back through opaque handles that must be released with the
 * matching *_free function. On failure the thread-local message from
 * irsec_last_error() describes what went wrong. Handles are immutable after
 * creation unless a setter is documented, and may be shared across threads
 * for read-only use.
 */

#ifndef IRSEC_IRSEC_H
#define IRSEC_IRSEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IRSEC_API __declspec(dllexport)
#else
#define IRSEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum irsec_status {
    IRSEC_OK = 0,
    IRSEC_ERROR_INVALID_ARGUMENT = 1,
    IRSEC_ERROR_NUMERICAL = 2,
    IRSEC_ERROR_IO = 3,
    IRSEC_ERROR_PARSE = 4,
    IRSEC_ERROR_UNKNOWN = 5
} irsec_status;

typedef struct irsec_scenario irsec_scenario;
typedef struct irsec_instance irsec_instance;
typedef struct irsec_solve_result irsec_solve_result;
typedef struct irsec_experiment irsec_experiment;
typedef struct irsec_result_table irsec_result_table;

typedef enum irsec_solver_kind {
    IRSEC_SOLVER_BCD = 0,
    IRSEC_SOLVER_AOMM = 1
} irsec_solver_kind;

typedef struct irsec_solver_options {
    double epsilon;       /* relative objective increment that stops iterating */
    int32_t max_iterations;
    int32_t trace_per_block; /* nonzero: record objective after every block */
} irsec_solver_options;

IRSEC_API const char* irsec_version(void);
IRSEC_API const char* irsec_status_name(irsec_status status);
/* Thread-local message describing the most recent failure on this thread. */
IRSEC_API const char* irsec_last_error(void);
/* Free any string returned through a char** out-parameter. */
IRSEC_API void irsec_string_free(char* s);

/* ---- scenario ------------------------------------------------------- */

IRSEC_API irsec_status irsec_scenario_from_json(const char* json_text,
                                                irsec_scenario** out);
IRSEC_API irsec_status irsec_scenario_from_file(const char* path,
                                                irsec_scenario** out);
IRSEC_API irsec_status irsec_scenario_to_json(const irsec_scenario* scenario,
                                              char** out_json);
IRSEC_API void irsec_scenario_free(irsec_scenario* scenario);

/* ---- channel realizations ------------------------------------------ */

/* Draw the realization for one trial index (substream seed ^ trial). */
IRSEC_API irsec_status irsec_instance_build(const irsec_scenario* scenario,
                                            uint64_t trial, irsec_instance** out);
IRSEC_API irsec_status irsec_instance_dims(const irsec_instance* instance,
                                           int32_t* m, int32_t* n_t);
IRSEC_API void irsec_instance_free(irsec_instance* instance);

/* ---- solving -------------------------------------------------------- */

IRSEC_API void irsec_solver_options_default(irsec_solver_options* options);

/* options may be NULL for the defaults. */
IRSEC_API irsec_status irsec_solve(const irsec_instance* instance,
                                   irsec_solver_kind solver,
                                   const irsec_solver_options* options,
                                   irsec_solve_result** out);
IRSEC_API void irsec_solve_result_free(irsec_solve_result* result);

IRSEC_API double irsec_solve_result_secrecy_rate(const irsec_solve_result* result);
IRSEC_API int32_t irsec_solve_result_iterations(const irsec_solve_result* result);
IRSEC_API int64_t irsec_solve_result_block_updates(const irsec_solve_result* result);
IRSEC_API int32_t irsec_solve_result_converged(const irsec_solve_result* result);
IRSEC_API int32_t irsec_solve_result_trace_length(const irsec_solve_result* result);
IRSEC_API irsec_status irsec_solve_result_trace(const irsec_solve_result* result,
                                                double* buffer, int32_t length);
/* Beamformer weights (length n_t) split into real/imag arrays. */
IRSEC_API irsec_status irsec_solve_result_beamformer(const irsec_solve_result* result,
                                                     double* re, double* im,
                                                     int32_t length);
/* Reflection phases theta in (-pi, pi], length m. */
IRSEC_API irsec_status irsec_solve_result_phases(const irsec_solve_result* result,
                                                 double* buffer, int32_t length);

/* Secrecy rate of an explicit (beamformer, phases) pair. */
IRSEC_API irsec_status irsec_secrecy_rate(const irsec_instance* instance,
                                          const double* f_re, const double* f_im,
                                          int32_t n_t, const double* theta, int32_t m,
                                          double* out_rate);

/* ---- baselines ------------------------------------------------------ */

/* Optimal beamforming on the direct channels; requires r_tl/r_te. */
IRSEC_API irsec_status irsec_no_irs_rate(const irsec_instance* instance,
                                         double* out_rate);
/* Uniformly random phases + optimal beamformer, for the given stream seed. */
IRSEC_API irsec_status irsec_random_phase_rate(const irsec_instance* instance,
                                               uint64_t seed, uint64_t trial,
                                               double* out_rate);

/* ---- experiments ---------------------------------------------------- */

IRSEC_API irsec_status irsec_experiment_from_json(const char* json_text,
                                                  irsec_experiment** out);
IRSEC_API irsec_status irsec_experiment_from_file(const char* path,
                                                  irsec_experiment** out);
IRSEC_API irsec_status irsec_experiment_preset(const char* name,
                                               irsec_experiment** out);
/* JSON array of the built-in preset names. */
IRSEC_API irsec_status irsec_preset_names(char** out_json);
IRSEC_API void irsec_experiment_free(irsec_experiment* experiment);

IRSEC_API irsec_status irsec_experiment_set_seed(irsec_experiment* experiment,
                                                 uint64_t seed);
IRSEC_API irsec_status irsec_experiment_set_trials(irsec_experiment* experiment,
                                                   int32_t trials);
IRSEC_API irsec_status irsec_experiment_set_epsilon(irsec_experiment* experiment,
                                                    double epsilon);
IRSEC_API irsec_status irsec_experiment_set_max_iterations(irsec_experiment* experiment,
                                                           int32_t max_iterations);
IRSEC_API irsec_status irsec_experiment_set_threads(irsec_experiment* experiment,
                                                    int32_t threads);
/* Nonzero: record the objective after every block update instead of once
 * per outer iteration (affects traces emitted by convergence runs). */
IRSEC_API irsec_status irsec_experiment_set_trace_per_block(irsec_experiment* experiment,
                                                            int32_t per_block);
/* Nonzero: emit measured wall-clock times into output files. The default 0
 * writes zeros there so reruns are byte-identical. */
IRSEC_API irsec_status irsec_experiment_set_timing(irsec_experiment* experiment,
                                                   int32_t emit_timing);
IRSEC_API irsec_status irsec_experiment_output_path(const irsec_experiment* experiment,
                                                    char** out_path);

IRSEC_API irsec_status irsec_experiment_run(const irsec_experiment* experiment,
                                            irsec_result_table** out);
IRSEC_API void irsec_result_table_free(irsec_result_table* table);

IRSEC_API int64_t irsec_result_table_rows(const irsec_result_table* table);
/* Nonzero when at least one per-trial solve reported a numerical failure. */
IRSEC_API int32_t irsec_result_table_any_failure(const irsec_result_table* table);
IRSEC_API irsec_status irsec_result_table_rate(const irsec_result_table* table,
                                               int64_t row, double* out_rate);
IRSEC_API irsec_status irsec_result_table_write_csv(const irsec_result_table* table,
                                                    const char* path);
IRSEC_API irsec_status irsec_result_table_write_jsonl(const irsec_result_table* table,
                                                      const char* path);
/* JSON array of per-(grid point, solver) aggregates. */
IRSEC_API irsec_status irsec_result_table_summary_json(const irsec_result_table* table,
                                                       char** out_json);

/* ---- reference checks ----------------------------------------------- */

/* Runs brute-force cross-checks (grid search, random search, Monte Carlo
 * moments) against the closed-form paths; returns a JSON report. */
IRSEC_API irsec_status irsec_self_check(uint64_t seed, char** out_json_report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IRSEC_IRSEC_H */
