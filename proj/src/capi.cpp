// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// extern-C boundary: exceptions from the core are translated to status
// codes here and never cross into callers.

#include "irsec/irsec.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "channel.hpp"
#include "errors.hpp"
#include "harness.hpp"
#include "model.hpp"
#include "selfcheck.hpp"
#include "solver.hpp"

using irsec::channel::ScenarioConfig;
using irsec::channel::SystemInstance;

struct irsec_scenario {
    ScenarioConfig cfg;
};

struct irsec_instance {
    SystemInstance inst;
    std::uint64_t seed = 0; // scenario seed, kept for the baselines
};

struct irsec_solve_result {
    irsec::solver::SolveResult res;
};

struct irsec_experiment {
    irsec::harness::ExperimentSpec spec;
};

struct irsec_result_table {
    irsec::harness::ResultTable table;
    bool emit_timing = false;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
irsec_status guarded(Fn&& fn) {
    try {
        fn();
        return IRSEC_OK;
    } catch (const irsec::InvalidArgument& e) {
        set_error(e.what());
        return IRSEC_ERROR_INVALID_ARGUMENT;
    } catch (const irsec::NumericalError& e) {
        set_error(e.what());
        return IRSEC_ERROR_NUMERICAL;
    } catch (const irsec::IoError& e) {
        set_error(e.what());
        return IRSEC_ERROR_IO;
    } catch (const irsec::ParseError& e) {
        set_error(e.what());
        return IRSEC_ERROR_PARSE;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return IRSEC_ERROR_UNKNOWN;
    } catch (const std::exception& e) {
        set_error(e.what());
        return IRSEC_ERROR_UNKNOWN;
    } catch (...) {
        set_error("unknown error");
        return IRSEC_ERROR_UNKNOWN;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

irsec_status require(bool cond, const char* msg) {
    if (cond) return IRSEC_OK;
    set_error(msg);
    return IRSEC_ERROR_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char* irsec_version(void) { return "0.1.0"; }

const char* irsec_status_name(irsec_status status) {
    switch (status) {
    case IRSEC_OK: return "ok";
    case IRSEC_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case IRSEC_ERROR_NUMERICAL: return "numerical_failure";
    case IRSEC_ERROR_IO: return "io_error";
    case IRSEC_ERROR_PARSE: return "parse_error";
    case IRSEC_ERROR_UNKNOWN: return "unknown_error";
    }
    return "?";
}

const char* irsec_last_error(void) { return g_last_error.c_str(); }

void irsec_string_free(char* s) { delete[] s; }

/* ---- scenario ------------------------------------------------------- */

irsec_status irsec_scenario_from_json(const char* json_text, irsec_scenario** out) {
    if (irsec_status st = require(json_text && out, "null argument")) return st;
    return guarded([&] {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(json_text);
        } catch (const nlohmann::json::exception& e) {
            throw irsec::ParseError(std::string("invalid JSON: ") + e.what());
        }
        *out = new irsec_scenario{ScenarioConfig::from_json(j)};
    });
}

irsec_status irsec_scenario_from_file(const char* path, irsec_scenario** out) {
    if (irsec_status st = require(path && out, "null argument")) return st;
    return guarded([&] {
        std::ifstream in(path);
        if (!in) throw irsec::IoError(std::string("cannot open scenario file: ") + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(buf.str());
        } catch (const nlohmann::json::exception& e) {
            throw irsec::ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
        }
        *out = new irsec_scenario{ScenarioConfig::from_json(j)};
    });
}

irsec_status irsec_scenario_to_json(const irsec_scenario* scenario, char** out_json) {
    if (irsec_status st = require(scenario && out_json, "null argument")) return st;
    return guarded([&] { *out_json = dup_string(scenario->cfg.to_json().dump(2)); });
}

void irsec_scenario_free(irsec_scenario* scenario) { delete scenario; }

/* ---- channel realizations ------------------------------------------ */

irsec_status irsec_instance_build(const irsec_scenario* scenario, uint64_t trial,
                                  irsec_instance** out) {
    if (irsec_status st = require(scenario && out, "null argument")) return st;
    return guarded([&] {
        irsec::SplitMix64 rng = irsec::SplitMix64::substream(scenario->cfg.seed, trial, 0);
        *out = new irsec_instance{irsec::channel::build_instance(scenario->cfg, rng),
                                  scenario->cfg.seed};
    });
}

irsec_status irsec_instance_dims(const irsec_instance* instance, int32_t* m,
                                 int32_t* n_t) {
    if (irsec_status st = require(instance && m && n_t, "null argument")) return st;
    *m = instance->inst.m();
    *n_t = instance->inst.n_t();
    return IRSEC_OK;
}

void irsec_instance_free(irsec_instance* instance) { delete instance; }

/* ---- solving -------------------------------------------------------- */

void irsec_solver_options_default(irsec_solver_options* options) {
    if (!options) return;
    const irsec::solver::SolverOptions d;
    options->epsilon = d.epsilon;
    options->max_iterations = d.max_iterations;
    options->trace_per_block = d.trace_per_block ? 1 : 0;
}

irsec_status irsec_solve(const irsec_instance* instance, irsec_solver_kind solver,
                         const irsec_solver_options* options,
                         irsec_solve_result** out) {
    if (irsec_status st = require(instance && out, "null argument")) return st;
    return guarded([&] {
        irsec::solver::SolverOptions opts;
        if (options) {
            opts.epsilon = options->epsilon;
            opts.max_iterations = options->max_iterations;
            opts.trace_per_block = options->trace_per_block != 0;
        }
        if (!(opts.epsilon > 0.0) || opts.max_iterations < 1)
            throw irsec::InvalidArgument("irsec_solve: bad solver options");
        auto res = solver == IRSEC_SOLVER_BCD
                       ? irsec::solver::solve_bcd(instance->inst, opts)
                       : irsec::solver::solve_aomm(instance->inst, opts);
        *out = new irsec_solve_result{std::move(res)};
    });
}

void irsec_solve_result_free(irsec_solve_result* result) { delete result; }

double irsec_solve_result_secrecy_rate(const irsec_solve_result* result) {
    return result ? result->res.trace.secrecy_rate_final : 0.0;
}

int32_t irsec_solve_result_iterations(const irsec_solve_result* result) {
    return result ? result->res.trace.iterations : 0;
}

int64_t irsec_solve_result_block_updates(const irsec_solve_result* result) {
    return result ? result->res.trace.block_updates : 0;
}

int32_t irsec_solve_result_converged(const irsec_solve_result* result) {
    return result && result->res.trace.converged ? 1 : 0;
}

int32_t irsec_solve_result_trace_length(const irsec_solve_result* result) {
    return result ? static_cast<int32_t>(result->res.trace.objective_history.size()) : 0;
}

irsec_status irsec_solve_result_trace(const irsec_solve_result* result, double* buffer,
                                      int32_t length) {
    if (irsec_status st = require(result && buffer, "null argument")) return st;
    const auto& h = result->res.trace.objective_history;
    if (length < static_cast<int32_t>(h.size()))
        return require(false, "irsec_solve_result_trace: buffer too short");
    std::memcpy(buffer, h.data(), h.size() * sizeof(double));
    return IRSEC_OK;
}

irsec_status irsec_solve_result_beamformer(const irsec_solve_result* result, double* re,
                                           double* im, int32_t length) {
    if (irsec_status st = require(result && re && im, "null argument")) return st;
    const auto& f = result->res.beamformer.f;
    if (length < static_cast<int32_t>(f.size()))
        return require(false, "irsec_solve_result_beamformer: buffer too short");
    for (std::size_t i = 0; i < f.size(); ++i) {
        re[i] = f[i].real();
        im[i] = f[i].imag();
    }
    return IRSEC_OK;
}

irsec_status irsec_solve_result_phases(const irsec_solve_result* result, double* buffer,
                                       int32_t length) {
    if (irsec_status st = require(result && buffer, "null argument")) return st;
    const auto& theta = result->res.phases.theta();
    if (length < static_cast<int32_t>(theta.size()))
        return require(false, "irsec_solve_result_phases: buffer too short");
    std::memcpy(buffer, theta.data(), theta.size() * sizeof(double));
    return IRSEC_OK;
}

irsec_status irsec_secrecy_rate(const irsec_instance* instance, const double* f_re,
                                const double* f_im, int32_t n_t, const double* theta,
                                int32_t m, double* out_rate) {
    if (irsec_status st = require(instance && f_re && f_im && theta && out_rate,
                                  "null argument"))
        return st;
    return guarded([&] {
        if (n_t != instance->inst.n_t() || m != instance->inst.m())
            throw irsec::InvalidArgument("irsec_secrecy_rate: dimension mismatch");
        irsec::linalg::CVec f(static_cast<std::size_t>(n_t));
        for (int32_t i = 0; i < n_t; ++i) f[static_cast<std::size_t>(i)] = {f_re[i], f_im[i]};
        std::vector<double> th(theta, theta + m);
        const irsec::model::PhaseVector phases(std::move(th));
        *out_rate = irsec::model::secrecy_rate(
            instance->inst, irsec::model::Beamformer::from_vector(std::move(f)), phases);
    });
}

/* ---- baselines ------------------------------------------------------ */

irsec_status irsec_no_irs_rate(const irsec_instance* instance, double* out_rate) {
    if (irsec_status st = require(instance && out_rate, "null argument")) return st;
    return guarded([&] { *out_rate = irsec::harness::no_irs_baseline(instance->inst); });
}

irsec_status irsec_random_phase_rate(const irsec_instance* instance, uint64_t seed,
                                     uint64_t trial, double* out_rate) {
    if (irsec_status st = require(instance && out_rate, "null argument")) return st;
    return guarded([&] {
        irsec::SplitMix64 rng = irsec::SplitMix64::substream(seed, trial, 1);
        *out_rate = irsec::harness::random_phase_baseline(instance->inst, rng);
    });
}

/* ---- experiments ---------------------------------------------------- */

irsec_status irsec_experiment_from_json(const char* json_text, irsec_experiment** out) {
    if (irsec_status st = require(json_text && out, "null argument")) return st;
    return guarded([&] {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(json_text);
        } catch (const nlohmann::json::exception& e) {
            throw irsec::ParseError(std::string("invalid JSON: ") + e.what());
        }
        *out = new irsec_experiment{irsec::harness::ExperimentSpec::from_json(j)};
    });
}

irsec_status irsec_experiment_from_file(const char* path, irsec_experiment** out) {
    if (irsec_status st = require(path && out, "null argument")) return st;
    return guarded(
        [&] { *out = new irsec_experiment{irsec::harness::ExperimentSpec::from_file(path)}; });
}

irsec_status irsec_experiment_preset(const char* name, irsec_experiment** out) {
    if (irsec_status st = require(name && out, "null argument")) return st;
    return guarded(
        [&] { *out = new irsec_experiment{irsec::harness::ExperimentSpec::preset(name)}; });
}

irsec_status irsec_preset_names(char** out_json) {
    if (irsec_status st = require(out_json != nullptr, "null argument")) return st;
    return guarded([&] {
        nlohmann::ordered_json arr = irsec::harness::ExperimentSpec::preset_names();
        *out_json = dup_string(arr.dump());
    });
}

void irsec_experiment_free(irsec_experiment* experiment) { delete experiment; }

irsec_status irsec_experiment_set_seed(irsec_experiment* experiment, uint64_t seed) {
    if (irsec_status st = require(experiment != nullptr, "null argument")) return st;
    experiment->spec.scenario.seed = seed;
    return IRSEC_OK;
}

irsec_status irsec_experiment_set_trials(irsec_experiment* experiment, int32_t trials) {
    if (irsec_status st = require(experiment != nullptr, "null argument")) return st;
    if (irsec_status st = require(trials >= 1, "trials must be >= 1")) return st;
    experiment->spec.scenario.trials = trials;
    return IRSEC_OK;
}

irsec_status irsec_experiment_set_epsilon(irsec_experiment* experiment, double epsilon) {
    if (irsec_status st = require(experiment != nullptr, "null argument")) return st;
    if (irsec_status st = require(epsilon > 0.0, "epsilon must be > 0")) return st;
    experiment->spec.options.epsilon = epsilon;
    return IRSEC_OK;
}

irsec_status irsec_experiment_set_max_iterations(irsec_experiment* experiment,
                                                 int32_t max_iterations) {
    if (irsec_status st = require(experiment != nullptr, "null argument")) return st;
    if (irsec_status st = require(max_iterations >= 1, "max_iterations must be >= 1"))
        return st;
    experiment->spec.options.max_iterations = max_iterations;
    return IRSEC_OK;
}

irsec_status irsec_experiment_set_threads(irsec_experiment* experiment, int32_t threads) {
    if (irsec_status st = require(experiment != nullptr, "null argument")) return st;
    if (irsec_status st = require(threads >= 1, "threads must be >= 1")) return st;
    experiment->spec.threads = threads;
    return IRSEC_OK;
}

irsec_status irsec_experiment_set_trace_per_block(irsec_experiment* experiment,
                                                  int32_t per_block) {
    if (irsec_status st = require(experiment != nullptr, "null argument")) return st;
    experiment->spec.options.trace_per_block = per_block != 0;
    return IRSEC_OK;
}

irsec_status irsec_experiment_set_timing(irsec_experiment* experiment,
                                         int32_t emit_timing) {
    if (irsec_status st = require(experiment != nullptr, "null argument")) return st;
    experiment->spec.emit_timing = emit_timing != 0;
    return IRSEC_OK;
}

irsec_status irsec_experiment_output_path(const irsec_experiment* experiment,
                                          char** out_path) {
    if (irsec_status st = require(experiment && out_path, "null argument")) return st;
    *out_path = dup_string(experiment->spec.output_path);
    return IRSEC_OK;
}

irsec_status irsec_experiment_run(const irsec_experiment* experiment,
                                  irsec_result_table** out) {
    if (irsec_status st = require(experiment && out, "null argument")) return st;
    return guarded([&] {
        auto table = irsec::harness::run_trials(experiment->spec);
        *out = new irsec_result_table{std::move(table), experiment->spec.emit_timing};
    });
}

void irsec_result_table_free(irsec_result_table* table) { delete table; }

int64_t irsec_result_table_rows(const irsec_result_table* table) {
    return table ? static_cast<int64_t>(table->table.rows.size()) : 0;
}

int32_t irsec_result_table_any_failure(const irsec_result_table* table) {
    return table && table->table.any_failure ? 1 : 0;
}

irsec_status irsec_result_table_rate(const irsec_result_table* table, int64_t row,
                                     double* out_rate) {
    if (irsec_status st = require(table && out_rate, "null argument")) return st;
    if (row < 0 || row >= static_cast<int64_t>(table->table.rows.size()))
        return require(false, "irsec_result_table_rate: row out of range");
    *out_rate = table->table.rows[static_cast<std::size_t>(row)].rate_bps_hz;
    return IRSEC_OK;
}

irsec_status irsec_result_table_write_csv(const irsec_result_table* table,
                                          const char* path) {
    if (irsec_status st = require(table && path, "null argument")) return st;
    return guarded([&] { irsec::harness::write_csv(table->table, path, table->emit_timing); });
}

irsec_status irsec_result_table_write_jsonl(const irsec_result_table* table,
                                            const char* path) {
    if (irsec_status st = require(table && path, "null argument")) return st;
    return guarded(
        [&] { irsec::harness::write_jsonl(table->table, path, table->emit_timing); });
}

irsec_status irsec_result_table_summary_json(const irsec_result_table* table,
                                             char** out_json) {
    if (irsec_status st = require(table && out_json, "null argument")) return st;
    return guarded(
        [&] { *out_json = dup_string(irsec::harness::summary_json(table->table).dump()); });
}

/* ---- reference checks ----------------------------------------------- */

irsec_status irsec_self_check(uint64_t seed, char** out_json_report) {
    if (irsec_status st = require(out_json_report != nullptr, "null argument")) return st;
    return guarded(
        [&] { *out_json_report = dup_string(irsec::selfcheck::run(seed).dump(2)); });
}

} // extern "C"
