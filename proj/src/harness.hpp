// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IRSEC_HARNESS_HPP
#define IRSEC_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "solver.hpp"

namespace irsec::harness {

enum class ExperimentKind { convergence, rate_vs_power, sweep_m_nt };
enum class SolverChoice { bcd, aomm, no_irs_baseline, random_phase_baseline };

std::string to_string(ExperimentKind k);
std::string to_string(SolverChoice s);

/// One Monte Carlo study: scenario, solver set, and the swept grid.
///  - convergence: optional m_grid (per-M traces), base scenario otherwise
///  - rate_vs_power: power_grid of p_dbm values
///  - sweep_m_nt: m_grid swept at the scenario's n_t, nt_grid swept at the
///    scenario's m (the two curves of the massive-IRS / massive-MIMO study)
struct ExperimentSpec {
    std::string name;
    ExperimentKind kind = ExperimentKind::convergence;
    channel::ScenarioConfig scenario;
    std::vector<SolverChoice> solvers;
    std::vector<double> power_grid;
    std::vector<int> m_grid;
    std::vector<int> nt_grid;
    std::string output_path;
    solver::SolverOptions options;
    int threads = 1;
    bool emit_timing = false; ///< real wall_ms in files (breaks byte reproducibility)

    void validate() const;
    static ExperimentSpec from_json(const nlohmann::json& j);
    static ExperimentSpec from_file(const std::string& path);
    static ExperimentSpec preset(const std::string& name);
    static std::vector<std::string> preset_names();
};

struct ResultRow {
    std::string experiment;
    std::int64_t trial = 0;
    std::uint64_t trial_seed = 0;
    std::string solver;
    int m = 0;
    int n_t = 0;
    double p_dbm = 0.0;
    double rate_bps_hz = 0.0;
    int iterations = 0;
    std::int64_t block_updates = 0;
    double wall_ms = 0.0;
    std::vector<double> objective_history; ///< emitted in JSON lines for convergence runs
    std::string error;                     ///< nonempty when the solver failed

    bool operator==(const ResultRow&) const = default;
};

struct Summary {
    std::string experiment;
    std::string solver;
    int m = 0;
    int n_t = 0;
    double p_dbm = 0.0;
    int trials = 0;
    double mean_rate = 0.0;
    double std_rate = 0.0;
    double mean_iterations = 0.0;
    double mean_block_updates = 0.0;
};

struct ResultTable {
    std::vector<ResultRow> rows;
    std::vector<Summary> summaries;
    bool any_failure = false;
};

/// Secrecy rate of the benchmark system without an IRS: the optimal
/// full-power beamformer applied to the direct channels.
double no_irs_baseline(const channel::SystemInstance& inst);

/// Secrecy rate with uniformly random phases and the optimal beamformer for
/// them; isolates the value of phase optimization.
double random_phase_baseline(const channel::SystemInstance& inst, SplitMix64& rng);

/// Run every (grid point, trial): each selected solver sees the same channel
/// draw (paired design), trials use substream seed ^ trial. Rows come back
/// sorted by (grid point, trial, solver) regardless of the thread count.
ResultTable run_trials(const ExperimentSpec& spec);

void write_csv(const ResultTable& table, const std::string& path, bool emit_timing);
void write_jsonl(const ResultTable& table, const std::string& path, bool emit_timing);
nlohmann::ordered_json summary_json(const ResultTable& table);

} // namespace irsec::harness

#endif
