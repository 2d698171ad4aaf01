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
// Exercises the shared-library surface the way an external consumer would.

#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "irsec/irsec.h"

namespace {

constexpr const char* kScenarioJson = R"({
    "n_t": 4, "m": 5, "p_dbm": 5, "noise_l_dbm": -80, "noise_e_dbm": -80,
    "alpha": 4, "r_tr": 200, "r_rl": 150, "r_re": 100,
    "r_tl": 300, "r_te": 110, "seed": 11, "trials": 4
})";

std::string take(char* s) {
    std::string out = s ? s : "";
    irsec_string_free(s);
    return out;
}

} // namespace

TEST_CASE("capi: version and status names") {
    CHECK(std::strlen(irsec_version()) > 0);
    CHECK(std::string(irsec_status_name(IRSEC_OK)) == "ok");
    CHECK(std::string(irsec_status_name(IRSEC_ERROR_PARSE)) == "parse_error");
}

TEST_CASE("capi: scenario parse failures set a message") {
    irsec_scenario* sc = nullptr;
    CHECK(irsec_scenario_from_json("{ not json", &sc) == IRSEC_ERROR_PARSE);
    CHECK(std::strlen(irsec_last_error()) > 0);

    CHECK(irsec_scenario_from_json(R"({"n_t": 2, "m": 2, "p_dbm": 0, "alpha": 2,
        "r_tr": 20, "r_rl": 20, "r_re": 20, "zzz": 1})",
                                   &sc) == IRSEC_ERROR_PARSE);
    CHECK(std::string(irsec_last_error()).find("zzz") != std::string::npos);

    CHECK(irsec_scenario_from_json(nullptr, &sc) == IRSEC_ERROR_INVALID_ARGUMENT);
    CHECK(irsec_scenario_from_file("/no/such/file.json", &sc) == IRSEC_ERROR_IO);

    // missing required keys and wrong value types are parse errors too
    CHECK(irsec_scenario_from_json(R"({"n_t": 2})", &sc) == IRSEC_ERROR_PARSE);
    CHECK(irsec_scenario_from_json(R"({"n_t": "two", "m": 2, "p_dbm": 0, "alpha": 2,
        "r_tr": 20, "r_rl": 20, "r_re": 20})",
                                   &sc) == IRSEC_ERROR_PARSE);
    CHECK(irsec_scenario_from_json(R"({"n_t": 2, "m": 2, "p_dbm": 0, "alpha": 2,
        "r_tr": 20, "r_rl": 20, "r_re": 20, "seed": -3})",
                                   &sc) == IRSEC_ERROR_PARSE);
}

TEST_CASE("capi: scenario round trip") {
    irsec_scenario* sc = nullptr;
    REQUIRE(irsec_scenario_from_json(kScenarioJson, &sc) == IRSEC_OK);
    char* text = nullptr;
    REQUIRE(irsec_scenario_to_json(sc, &text) == IRSEC_OK);
    const auto j = nlohmann::json::parse(take(text));
    CHECK(j.at("n_t") == 4);
    CHECK(j.at("m") == 5);
    CHECK(j.at("seed") == 11);
    irsec_scenario_free(sc);
}

TEST_CASE("capi: build, solve, inspect") {
    irsec_scenario* sc = nullptr;
    REQUIRE(irsec_scenario_from_json(kScenarioJson, &sc) == IRSEC_OK);

    irsec_instance* inst = nullptr;
    REQUIRE(irsec_instance_build(sc, 0, &inst) == IRSEC_OK);
    int32_t m = 0, n_t = 0;
    REQUIRE(irsec_instance_dims(inst, &m, &n_t) == IRSEC_OK);
    CHECK(m == 5);
    CHECK(n_t == 4);

    irsec_solver_options opts;
    irsec_solver_options_default(&opts);
    CHECK(opts.epsilon == 1e-6);
    CHECK(opts.max_iterations == 10000);

    for (irsec_solver_kind kind : {IRSEC_SOLVER_BCD, IRSEC_SOLVER_AOMM}) {
        irsec_solve_result* res = nullptr;
        REQUIRE(irsec_solve(inst, kind, &opts, &res) == IRSEC_OK);
        CHECK(irsec_solve_result_converged(res) == 1);
        CHECK(irsec_solve_result_secrecy_rate(res) >= 0.0);
        CHECK(irsec_solve_result_iterations(res) >= 1);
        CHECK(irsec_solve_result_block_updates(res) >=
              irsec_solve_result_iterations(res));

        const int32_t len = irsec_solve_result_trace_length(res);
        REQUIRE(len >= 1);
        std::vector<double> trace(static_cast<std::size_t>(len));
        REQUIRE(irsec_solve_result_trace(res, trace.data(), len) == IRSEC_OK);
        for (std::size_t i = 1; i < trace.size(); ++i)
            CHECK(trace[i] >= trace[i - 1] - 1e-10 * trace[i - 1]);

        std::vector<double> re(static_cast<std::size_t>(n_t)),
            im(static_cast<std::size_t>(n_t)), theta(static_cast<std::size_t>(m));
        REQUIRE(irsec_solve_result_beamformer(res, re.data(), im.data(), n_t) == IRSEC_OK);
        REQUIRE(irsec_solve_result_phases(res, theta.data(), m) == IRSEC_OK);

        // recomputing the rate from the returned pair reproduces the result
        double rate = 0.0;
        REQUIRE(irsec_secrecy_rate(inst, re.data(), im.data(), n_t, theta.data(), m,
                                   &rate) == IRSEC_OK);
        CHECK(rate == doctest::Approx(irsec_solve_result_secrecy_rate(res)).epsilon(1e-10));

        // short buffers are rejected
        CHECK(irsec_solve_result_trace(res, trace.data(), 0) ==
              IRSEC_ERROR_INVALID_ARGUMENT);
        irsec_solve_result_free(res);
    }

    // null options fall back to the defaults
    irsec_solve_result* res = nullptr;
    REQUIRE(irsec_solve(inst, IRSEC_SOLVER_BCD, nullptr, &res) == IRSEC_OK);
    CHECK(irsec_solve_result_secrecy_rate(res) >= 0.0);
    irsec_solve_result_free(res);

    double base = 0.0;
    REQUIRE(irsec_no_irs_rate(inst, &base) == IRSEC_OK);
    CHECK(base >= 0.0);
    double rate1 = 0.0, rate2 = 0.0;
    REQUIRE(irsec_random_phase_rate(inst, 11, 0, &rate1) == IRSEC_OK);
    REQUIRE(irsec_random_phase_rate(inst, 11, 0, &rate2) == IRSEC_OK);
    CHECK(rate1 == rate2);

    irsec_instance_free(inst);
    irsec_scenario_free(sc);
}

TEST_CASE("capi: experiment presets run and write output") {
    char* names_raw = nullptr;
    REQUIRE(irsec_preset_names(&names_raw) == IRSEC_OK);
    const auto names = nlohmann::json::parse(take(names_raw));
    CHECK(names.size() >= 4);

    irsec_experiment* exp = nullptr;
    REQUIRE(irsec_experiment_preset("fig3", &exp) == IRSEC_OK);
    REQUIRE(irsec_experiment_set_trials(exp, 2) == IRSEC_OK);
    REQUIRE(irsec_experiment_set_seed(exp, 5) == IRSEC_OK);
    REQUIRE(irsec_experiment_set_epsilon(exp, 1e-4) == IRSEC_OK);
    REQUIRE(irsec_experiment_set_threads(exp, 2) == IRSEC_OK);
    REQUIRE(irsec_experiment_set_trace_per_block(exp, 1) == IRSEC_OK);
    CHECK(irsec_experiment_set_trials(exp, 0) == IRSEC_ERROR_INVALID_ARGUMENT);
    CHECK(irsec_experiment_set_epsilon(exp, -1.0) == IRSEC_ERROR_INVALID_ARGUMENT);

    irsec_result_table* table = nullptr;
    REQUIRE(irsec_experiment_run(exp, &table) == IRSEC_OK);
    CHECK(irsec_result_table_rows(table) == 2 * 2 * 2); // 2 grid points x 2 trials x 2 solvers
    CHECK(irsec_result_table_any_failure(table) == 0);

    double rate = 0.0;
    REQUIRE(irsec_result_table_rate(table, 0, &rate) == IRSEC_OK);
    CHECK(rate >= 0.0);
    CHECK(irsec_result_table_rate(table, 9999, &rate) == IRSEC_ERROR_INVALID_ARGUMENT);

    const auto csv_path = std::filesystem::temp_directory_path() / "irsec_capi.csv";
    const auto jsonl_path = std::filesystem::temp_directory_path() / "irsec_capi.jsonl";
    REQUIRE(irsec_result_table_write_csv(table, csv_path.string().c_str()) == IRSEC_OK);
    REQUIRE(irsec_result_table_write_jsonl(table, jsonl_path.string().c_str()) == IRSEC_OK);
    CHECK(std::filesystem::file_size(csv_path) > 0);
    CHECK(std::filesystem::file_size(jsonl_path) > 0);
    std::filesystem::remove(csv_path);
    std::filesystem::remove(jsonl_path);

    char* summary_raw = nullptr;
    REQUIRE(irsec_result_table_summary_json(table, &summary_raw) == IRSEC_OK);
    const auto summaries = nlohmann::json::parse(take(summary_raw));
    CHECK(summaries.size() == 4); // 2 grid points x 2 solvers

    irsec_result_table_free(table);
    irsec_experiment_free(exp);

    CHECK(irsec_experiment_preset("bogus", &exp) == IRSEC_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("capi: experiment rows match standalone solves") {
    // the harness route and the instance/solve route must see the same draws
    const char* spec_json = R"({
        "name": "xcheck", "kind": "convergence",
        "scenario": {"n_t": 4, "m": 5, "p_dbm": 5, "alpha": 4,
                      "r_tr": 200, "r_rl": 150, "r_re": 100, "seed": 31, "trials": 3},
        "solvers": ["bcd"]
    })";
    irsec_experiment* exp = nullptr;
    REQUIRE(irsec_experiment_from_json(spec_json, &exp) == IRSEC_OK);
    irsec_result_table* table = nullptr;
    REQUIRE(irsec_experiment_run(exp, &table) == IRSEC_OK);
    REQUIRE(irsec_result_table_rows(table) == 3);

    irsec_scenario* sc = nullptr;
    REQUIRE(irsec_scenario_from_json(R"({"n_t": 4, "m": 5, "p_dbm": 5, "alpha": 4,
        "r_tr": 200, "r_rl": 150, "r_re": 100, "seed": 31, "trials": 3})",
                                     &sc) == IRSEC_OK);
    for (int64_t trial = 0; trial < 3; ++trial) {
        irsec_instance* inst = nullptr;
        REQUIRE(irsec_instance_build(sc, static_cast<uint64_t>(trial), &inst) == IRSEC_OK);
        irsec_solve_result* res = nullptr;
        REQUIRE(irsec_solve(inst, IRSEC_SOLVER_BCD, nullptr, &res) == IRSEC_OK);
        double row_rate = 0.0;
        REQUIRE(irsec_result_table_rate(table, trial, &row_rate) == IRSEC_OK);
        CHECK(row_rate == irsec_solve_result_secrecy_rate(res));
        irsec_solve_result_free(res);
        irsec_instance_free(inst);
    }
    irsec_scenario_free(sc);
    irsec_result_table_free(table);
    irsec_experiment_free(exp);
}

TEST_CASE("capi: experiment specs from JSON text") {
    const char* spec_json = R"({
        "name": "capi_demo", "kind": "convergence",
        "scenario": {"n_t": 3, "m": 4, "p_dbm": 5, "alpha": 4,
                      "r_tr": 40, "r_rl": 25, "r_re": 20, "seed": 2, "trials": 2},
        "solvers": ["bcd"]
    })";
    irsec_experiment* exp = nullptr;
    REQUIRE(irsec_experiment_from_json(spec_json, &exp) == IRSEC_OK);
    irsec_result_table* table = nullptr;
    REQUIRE(irsec_experiment_run(exp, &table) == IRSEC_OK);
    CHECK(irsec_result_table_rows(table) == 2);
    irsec_result_table_free(table);
    irsec_experiment_free(exp);

    CHECK(irsec_experiment_from_json(R"({"kind": "convergence"})", &exp) !=
          IRSEC_OK);
}

TEST_CASE("capi: self check passes") {
    char* report_raw = nullptr;
    REQUIRE(irsec_self_check(1, &report_raw) == IRSEC_OK);
    const auto report = nlohmann::json::parse(take(report_raw));
    CHECK(report.at("pass").get<bool>());
}
