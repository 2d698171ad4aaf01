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
// Command-line front end. Talks to the core exclusively through the public
// C API in irsec/irsec.h.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "irsec/irsec.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitNumericalFailure = 3;

struct ExperimentHandle {
    irsec_experiment* ptr = nullptr;
    ~ExperimentHandle() { irsec_experiment_free(ptr); }
};

struct TableHandle {
    irsec_result_table* ptr = nullptr;
    ~TableHandle() { irsec_result_table_free(ptr); }
};

std::string take_string(char* s) {
    std::string out = s ? s : "";
    irsec_string_free(s);
    return out;
}

void report_error(const char* what, irsec_status st) {
    std::fprintf(stderr, "irsec: %s: %s (%s)\n", what, irsec_last_error(),
                 irsec_status_name(st));
}

struct RunFlags {
    std::uint64_t seed = 0;
    bool seed_set = false;
    int trials = 0;
    double epsilon = 0.0;
    int max_iterations = 0;
    std::string out_path;
    std::string format = "csv";
    std::string trace_granularity;
    int threads = 0;
    bool timing = false;
};

void add_run_flags(CLI::App* cmd, RunFlags& flags) {
    cmd->add_option("--seed", flags.seed, "Override the scenario seed")
        ->each([&flags](const std::string&) { flags.seed_set = true; });
    cmd->add_option("--trials", flags.trials, "Override the trial count");
    cmd->add_option("--epsilon", flags.epsilon,
                    "Relative objective increment that stops a solver");
    cmd->add_option("--max-iters", flags.max_iterations, "Outer iteration cap");
    cmd->add_option("--out", flags.out_path, "Output file path");
    cmd->add_option("--format", flags.format, "Output format: csv, jsonl or both")
        ->check(CLI::IsMember({"csv", "jsonl", "both"}));
    cmd->add_option("--trace-granularity", flags.trace_granularity,
                    "Objective trace granularity: iteration or block")
        ->check(CLI::IsMember({"iteration", "block"}));
    cmd->add_option("--threads", flags.threads, "Worker threads (output is identical)");
    cmd->add_flag("--timing", flags.timing,
                  "Emit measured wall-clock times (breaks byte reproducibility)");
}

int run_experiment(irsec_experiment* exp, const RunFlags& flags) {
    irsec_status st = IRSEC_OK;
    if (flags.seed_set) st = irsec_experiment_set_seed(exp, flags.seed);
    if (st == IRSEC_OK && flags.trials > 0) st = irsec_experiment_set_trials(exp, flags.trials);
    if (st == IRSEC_OK && flags.epsilon > 0.0)
        st = irsec_experiment_set_epsilon(exp, flags.epsilon);
    if (st == IRSEC_OK && flags.max_iterations > 0)
        st = irsec_experiment_set_max_iterations(exp, flags.max_iterations);
    if (st == IRSEC_OK && flags.threads > 0) st = irsec_experiment_set_threads(exp, flags.threads);
    if (st == IRSEC_OK && !flags.trace_granularity.empty())
        st = irsec_experiment_set_trace_per_block(exp, flags.trace_granularity == "block");
    if (st == IRSEC_OK && flags.timing) st = irsec_experiment_set_timing(exp, 1);
    if (st != IRSEC_OK) {
        report_error("bad option", st);
        return kExitInvalidConfig;
    }

    TableHandle table;
    st = irsec_experiment_run(exp, &table.ptr);
    if (st != IRSEC_OK) {
        report_error("experiment failed", st);
        return kExitInvalidConfig;
    }

    std::string out_path = flags.out_path;
    if (out_path.empty()) {
        char* p = nullptr;
        irsec_experiment_output_path(exp, &p);
        out_path = take_string(p);
        if (out_path.empty()) out_path = "results.csv";
    }

    auto strip_ext = [](const std::string& path) {
        const std::size_t dot = path.find_last_of('.');
        const std::size_t slash = path.find_last_of('/');
        if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
            return path;
        return path.substr(0, dot);
    };

    if (flags.format == "csv" || flags.format == "both") {
        const std::string path =
            flags.format == "both" ? strip_ext(out_path) + ".csv" : out_path;
        st = irsec_result_table_write_csv(table.ptr, path.c_str());
        if (st != IRSEC_OK) {
            report_error("write failed", st);
            return kExitInvalidConfig;
        }
        std::printf("wrote %s (%lld rows)\n", path.c_str(),
                    static_cast<long long>(irsec_result_table_rows(table.ptr)));
    }
    if (flags.format == "jsonl" || flags.format == "both") {
        const std::string path =
            flags.format == "both" ? strip_ext(out_path) + ".jsonl" : out_path;
        st = irsec_result_table_write_jsonl(table.ptr, path.c_str());
        if (st != IRSEC_OK) {
            report_error("write failed", st);
            return kExitInvalidConfig;
        }
        std::printf("wrote %s (%lld rows)\n", path.c_str(),
                    static_cast<long long>(irsec_result_table_rows(table.ptr)));
    }

    char* summary_raw = nullptr;
    if (irsec_result_table_summary_json(table.ptr, &summary_raw) == IRSEC_OK) {
        const auto summaries = nlohmann::json::parse(take_string(summary_raw));
        std::printf("%-24s %-22s %4s %4s %7s %7s %12s %12s\n", "experiment", "solver", "m",
                    "n_t", "p_dbm", "trials", "mean_rate", "std_rate");
        for (const auto& s : summaries) {
            std::printf("%-24s %-22s %4d %4d %7.6g %7d %12.6f %12.6f\n",
                        s.at("experiment").get<std::string>().c_str(),
                        s.at("solver").get<std::string>().c_str(), s.at("m").get<int>(),
                        s.at("n_t").get<int>(), s.at("p_dbm").get<double>(),
                        s.at("trials").get<int>(), s.at("mean_rate").get<double>(),
                        s.at("std_rate").get<double>());
        }
    }

    if (irsec_result_table_any_failure(table.ptr)) {
        std::fprintf(stderr, "irsec: at least one trial reported a numerical failure; "
                             "results were still written\n");
        return kExitNumericalFailure;
    }
    return kExitOk;
}

int cmd_oracle(std::uint64_t seed, bool as_json) {
    char* report_raw = nullptr;
    const irsec_status st = irsec_self_check(seed, &report_raw);
    if (st != IRSEC_OK) {
        report_error("self check failed", st);
        return kExitInvalidConfig;
    }
    const std::string report_text = take_string(report_raw);
    if (as_json) {
        std::printf("%s\n", report_text.c_str());
    } else {
        const auto report = nlohmann::json::parse(report_text);
        std::printf("reference checks (seed %llu)\n",
                    static_cast<unsigned long long>(seed));
        std::printf("  %-28s %-6s %s\n", "check", "result", "detail");
        for (const auto& [key, value] : report.items()) {
            if (!value.is_object()) continue;
            const bool pass = value.value("pass", false);
            std::string detail;
            for (const auto& [k2, v2] : value.items()) {
                if (k2 == "pass" || v2.is_array() || v2.is_object()) continue;
                if (!detail.empty()) detail += "  ";
                detail += k2 + "=" + v2.dump();
            }
            std::printf("  %-28s %-6s %s\n", key.c_str(), pass ? "pass" : "FAIL",
                        detail.c_str());
        }
        const bool all = report.value("pass", false);
        std::printf("overall: %s\n", all ? "pass" : "FAIL");
        if (!all) return kExitNumericalFailure;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy-rate optimization for IRS-assisted MISO wiretap channels"};
    app.require_subcommand(1);

    // run: experiment spec from a JSON file
    std::string spec_path;
    RunFlags run_flags;
    CLI::App* run = app.add_subcommand("run", "Run an experiment spec (JSON file)");
    run->add_option("spec", spec_path, "Experiment spec file")->required();
    add_run_flags(run, run_flags);

    // preset: named built-in experiment
    std::string preset_name;
    bool preset_list = false;
    RunFlags preset_flags;
    CLI::App* preset = app.add_subcommand("preset", "Run a built-in experiment preset");
    preset->add_option("name", preset_name, "Preset name");
    preset->add_flag("--list", preset_list, "List available presets");
    add_run_flags(preset, preset_flags);

    // oracle: brute-force reference checks
    std::uint64_t oracle_seed = 1;
    bool oracle_json = false;
    CLI::App* oracle = app.add_subcommand("oracle", "Run brute-force reference checks");
    oracle->add_option("--seed", oracle_seed, "Seed for the randomized checks");
    oracle->add_flag("--json", oracle_json, "Print the full JSON report");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        ExperimentHandle exp;
        const irsec_status st = irsec_experiment_from_file(spec_path.c_str(), &exp.ptr);
        if (st != IRSEC_OK) {
            report_error("invalid experiment spec", st);
            return kExitInvalidConfig;
        }
        return run_experiment(exp.ptr, run_flags);
    }

    if (preset->parsed()) {
        if (preset_list || preset_name.empty()) {
            char* names_raw = nullptr;
            if (irsec_preset_names(&names_raw) == IRSEC_OK) {
                const auto names = nlohmann::json::parse(take_string(names_raw));
                for (const auto& n : names) std::printf("%s\n", n.get<std::string>().c_str());
            }
            return preset_list || preset_name.empty() ? kExitOk : kExitInvalidConfig;
        }
        ExperimentHandle exp;
        const irsec_status st = irsec_experiment_preset(preset_name.c_str(), &exp.ptr);
        if (st != IRSEC_OK) {
            report_error("unknown preset", st);
            return kExitInvalidConfig;
        }
        return run_experiment(exp.ptr, preset_flags);
    }

    if (oracle->parsed()) return cmd_oracle(oracle_seed, oracle_json);
    return kExitOk;
}
