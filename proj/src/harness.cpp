// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "errors.hpp"

namespace irsec::harness {

using channel::ScenarioConfig;
using channel::SystemInstance;

std::string to_string(ExperimentKind k) {
    switch (k) {
    case ExperimentKind::convergence: return "convergence";
    case ExperimentKind::rate_vs_power: return "rate_vs_power";
    case ExperimentKind::sweep_m_nt: return "sweep_m_nt";
    }
    return "?";
}

std::string to_string(SolverChoice s) {
    switch (s) {
    case SolverChoice::bcd: return "bcd";
    case SolverChoice::aomm: return "aomm";
    case SolverChoice::no_irs_baseline: return "no_irs_baseline";
    case SolverChoice::random_phase_baseline: return "random_phase_baseline";
    }
    return "?";
}

namespace {

ExperimentKind kind_from_string(const std::string& s) {
    if (s == "convergence") return ExperimentKind::convergence;
    if (s == "rate_vs_power") return ExperimentKind::rate_vs_power;
    if (s == "sweep_m_nt") return ExperimentKind::sweep_m_nt;
    throw ParseError("ExperimentSpec: unknown kind '" + s + "'");
}

SolverChoice solver_from_string(const std::string& s) {
    if (s == "bcd") return SolverChoice::bcd;
    if (s == "aomm") return SolverChoice::aomm;
    if (s == "no_irs_baseline") return SolverChoice::no_irs_baseline;
    if (s == "random_phase_baseline") return SolverChoice::random_phase_baseline;
    throw ParseError("ExperimentSpec: unknown solver '" + s + "'");
}

template <typename T>
void require_strictly_increasing(const std::vector<T>& grid, const char* name) {
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw InvalidArgument(std::string("ExperimentSpec: ") + name +
                                  " must be strictly increasing");
}

} // namespace

void ExperimentSpec::validate() const {
    scenario.validate();
    if (solvers.empty()) throw InvalidArgument("ExperimentSpec: at least one solver required");
    std::set<SolverChoice> seen(solvers.begin(), solvers.end());
    if (seen.size() != solvers.size())
        throw InvalidArgument("ExperimentSpec: duplicate solver entries");
    if (seen.count(SolverChoice::no_irs_baseline) && (!scenario.r_tl || !scenario.r_te))
        throw InvalidArgument(
            "ExperimentSpec: no_irs_baseline requires r_tl and r_te in the scenario");
    require_strictly_increasing(power_grid, "power_grid");
    require_strictly_increasing(m_grid, "m_grid");
    require_strictly_increasing(nt_grid, "nt_grid");
    for (int m : m_grid)
        if (m < 1) throw InvalidArgument("ExperimentSpec: m_grid entries must be >= 1");
    for (int n : nt_grid)
        if (n < 1) throw InvalidArgument("ExperimentSpec: nt_grid entries must be >= 1");

    switch (kind) {
    case ExperimentKind::convergence:
        if (!power_grid.empty() || !nt_grid.empty())
            throw InvalidArgument("ExperimentSpec: convergence accepts only m_grid");
        break;
    case ExperimentKind::rate_vs_power:
        if (power_grid.empty())
            throw InvalidArgument("ExperimentSpec: rate_vs_power requires power_grid");
        if (!m_grid.empty() || !nt_grid.empty())
            throw InvalidArgument("ExperimentSpec: rate_vs_power accepts only power_grid");
        break;
    case ExperimentKind::sweep_m_nt:
        if (m_grid.empty() && nt_grid.empty())
            throw InvalidArgument("ExperimentSpec: sweep_m_nt requires m_grid or nt_grid");
        if (!power_grid.empty())
            throw InvalidArgument("ExperimentSpec: sweep_m_nt does not accept power_grid");
        break;
    }
    if (threads < 1) throw InvalidArgument("ExperimentSpec: threads must be >= 1");
    if (!(options.epsilon > 0.0))
        throw InvalidArgument("ExperimentSpec: epsilon must be > 0");
    if (options.max_iterations < 1)
        throw InvalidArgument("ExperimentSpec: max_iterations must be >= 1");
}

ExperimentSpec ExperimentSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("ExperimentSpec: expected a JSON object");
    static const std::set<std::string> known = {
        "name",   "kind",    "scenario",       "solvers",        "power_grid",
        "m_grid", "nt_grid", "output_path",    "epsilon",        "max_iterations",
        "threads", "timing", "trace_granularity"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!known.count(key)) throw ParseError("ExperimentSpec: unknown key '" + key + "'");
    }

    ExperimentSpec spec;
    try {
        spec.kind = kind_from_string(j.at("kind").get<std::string>());
        spec.name = j.contains("name") ? j.at("name").get<std::string>() : to_string(spec.kind);
        spec.scenario = ScenarioConfig::from_json(j.at("scenario"));
        for (const auto& s : j.at("solvers"))
            spec.solvers.push_back(solver_from_string(s.get<std::string>()));
        if (j.contains("power_grid")) spec.power_grid = j.at("power_grid").get<std::vector<double>>();
        if (j.contains("m_grid")) spec.m_grid = j.at("m_grid").get<std::vector<int>>();
        if (j.contains("nt_grid")) spec.nt_grid = j.at("nt_grid").get<std::vector<int>>();
        if (j.contains("output_path")) spec.output_path = j.at("output_path").get<std::string>();
        if (j.contains("epsilon")) spec.options.epsilon = j.at("epsilon").get<double>();
        if (j.contains("max_iterations"))
            spec.options.max_iterations = j.at("max_iterations").get<int>();
        if (j.contains("trace_granularity")) {
            const std::string g = j.at("trace_granularity").get<std::string>();
            if (g == "block") spec.options.trace_per_block = true;
            else if (g == "iteration") spec.options.trace_per_block = false;
            else throw ParseError("ExperimentSpec: trace_granularity must be 'iteration' or 'block'");
        }
        if (j.contains("threads")) spec.threads = j.at("threads").get<int>();
        if (j.contains("timing")) spec.emit_timing = j.at("timing").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ExperimentSpec: ") + e.what());
    }
    spec.validate();
    return spec;
}

ExperimentSpec ExperimentSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open experiment spec: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return from_json(j);
}

namespace {

ScenarioConfig base_scenario(int n_t, int m, double p_dbm, double alpha, double r_tr,
                             double r_rl, double r_re) {
    ScenarioConfig c;
    c.n_t = n_t;
    c.m = m;
    c.p_dbm = p_dbm;
    c.alpha = alpha;
    c.r_tr = r_tr;
    c.r_rl = r_rl;
    c.r_re = r_re;
    c.seed = 1;
    c.trials = 200;
    return c;
}

} // namespace

ExperimentSpec ExperimentSpec::preset(const std::string& name) {
    ExperimentSpec spec;
    spec.name = name;
    if (name == "fig3") {
        // Convergence study: small vs large surface at fixed transmitter.
        spec.kind = ExperimentKind::convergence;
        spec.scenario = base_scenario(5, 5, 5.0, 4.0, 250.0, 160.0, 160.0);
        spec.m_grid = {5, 40};
        spec.solvers = {SolverChoice::bcd, SolverChoice::aomm};
        spec.scenario.trials = 100;
    } else if (name == "fig4_near" || name == "fig4_far" || name == "fig4_blocked") {
        // Rate vs transmit power with the no-IRS benchmark. The direct-path
        // distances are project choices (one example nearer than the IRS
        // hops, one farther, one with a heavily blocked direct path).
        spec.kind = ExperimentKind::rate_vs_power;
        spec.scenario = base_scenario(8, 10, 5.0, 4.0, 200.0, 150.0, 100.0);
        if (name == "fig4_near") {
            spec.scenario.r_tl = 120.0;
            spec.scenario.r_te = 80.0;
        } else if (name == "fig4_far") {
            spec.scenario.r_tl = 300.0;
            spec.scenario.r_te = 110.0;
        } else {
            spec.scenario.r_tl = 2000.0;
            spec.scenario.r_te = 1800.0;
        }
        spec.power_grid = {-5.0, 0.0, 5.0, 10.0, 15.0};
        spec.solvers = {SolverChoice::bcd, SolverChoice::aomm,
                        SolverChoice::no_irs_baseline, SolverChoice::random_phase_baseline};
    } else if (name == "fig5") {
        // Massive-IRS vs massive-MIMO sweep.
        spec.kind = ExperimentKind::sweep_m_nt;
        spec.scenario = base_scenario(10, 10, 5.0, 4.0, 200.0, 150.0, 100.0);
        spec.scenario.r_tl = 300.0;
        spec.scenario.r_te = 110.0;
        spec.m_grid = {10, 20, 30, 40};
        spec.nt_grid = {10, 20, 30, 40};
        spec.solvers = {SolverChoice::bcd, SolverChoice::aomm, SolverChoice::no_irs_baseline};
    } else {
        throw InvalidArgument("unknown preset '" + name + "'");
    }
    spec.output_path = name + ".csv";
    spec.validate();
    return spec;
}

std::vector<std::string> ExperimentSpec::preset_names() {
    return {"fig3", "fig4_near", "fig4_far", "fig4_blocked", "fig5"};
}

double no_irs_baseline(const SystemInstance& inst) {
    if (!inst.direct_h_l || !inst.direct_h_e)
        throw InvalidArgument("no_irs_baseline: instance lacks direct channels");
    const auto sol = model::optimal_beamformer_for_channels(
        *inst.direct_h_l, *inst.direct_h_e, inst.sigma2_l, inst.sigma2_e, inst.p);
    return std::max(0.0, std::log2(sol.ratio));
}

double random_phase_baseline(const SystemInstance& inst, SplitMix64& rng) {
    std::vector<double> theta(static_cast<std::size_t>(inst.m()));
    for (double& t : theta)
        t = model::wrap_angle((2.0 * rng.next_unit() - 1.0) * std::numbers::pi);
    const model::PhaseVector phases(std::move(theta));
    const model::Beamformer f = model::optimal_beamformer(inst, phases);
    return model::secrecy_rate(inst, f, phases);
}

namespace {

struct GridPoint {
    std::string label; ///< experiment column value
    ScenarioConfig cfg;
};

std::vector<GridPoint> expand_grid(const ExperimentSpec& spec) {
    std::vector<GridPoint> points;
    switch (spec.kind) {
    case ExperimentKind::convergence:
        if (spec.m_grid.empty()) {
            points.push_back({spec.name, spec.scenario});
        } else {
            for (int m : spec.m_grid) {
                GridPoint p{spec.name, spec.scenario};
                p.cfg.m = m;
                points.push_back(std::move(p));
            }
        }
        break;
    case ExperimentKind::rate_vs_power:
        for (double p_dbm : spec.power_grid) {
            GridPoint p{spec.name, spec.scenario};
            p.cfg.p_dbm = p_dbm;
            points.push_back(std::move(p));
        }
        break;
    case ExperimentKind::sweep_m_nt:
        for (int m : spec.m_grid) {
            GridPoint p{spec.name + "/m_sweep", spec.scenario};
            p.cfg.m = m;
            points.push_back(std::move(p));
        }
        for (int nt : spec.nt_grid) {
            GridPoint p{spec.name + "/nt_sweep", spec.scenario};
            p.cfg.n_t = nt;
            points.push_back(std::move(p));
        }
        break;
    }
    return points;
}

ResultRow run_one(const ExperimentSpec& spec, const GridPoint& gp, std::int64_t trial,
                  SolverChoice choice, const SystemInstance& inst) {
    ResultRow row;
    row.experiment = gp.label;
    row.trial = trial;
    row.trial_seed = gp.cfg.seed ^ static_cast<std::uint64_t>(trial);
    row.solver = to_string(choice);
    row.m = gp.cfg.m;
    row.n_t = gp.cfg.n_t;
    row.p_dbm = gp.cfg.p_dbm;
    try {
        switch (choice) {
        case SolverChoice::bcd:
        case SolverChoice::aomm: {
            const solver::SolveResult res = choice == SolverChoice::bcd
                                                ? solver::solve_bcd(inst, spec.options)
                                                : solver::solve_aomm(inst, spec.options);
            row.rate_bps_hz = res.trace.secrecy_rate_final;
            row.iterations = res.trace.iterations;
            row.block_updates = res.trace.block_updates;
            row.wall_ms = res.trace.wall_ms;
            if (spec.kind == ExperimentKind::convergence)
                row.objective_history = res.trace.objective_history;
            break;
        }
        case SolverChoice::no_irs_baseline:
            row.rate_bps_hz = no_irs_baseline(inst);
            break;
        case SolverChoice::random_phase_baseline: {
            SplitMix64 rng = SplitMix64::substream(gp.cfg.seed,
                                                   static_cast<std::uint64_t>(trial), 1);
            row.rate_bps_hz = random_phase_baseline(inst, rng);
            break;
        }
        }
    } catch (const NumericalError& e) {
        row.rate_bps_hz = std::nan("");
        row.error = e.what();
    }
    return row;
}

} // namespace

ResultTable run_trials(const ExperimentSpec& spec) {
    spec.validate();
    const std::vector<GridPoint> points = expand_grid(spec);
    const int trials = spec.scenario.trials;
    const std::size_t n_solvers = spec.solvers.size();
    const std::size_t n_tasks = points.size() * static_cast<std::size_t>(trials);

    ResultTable table;
    table.rows.resize(n_tasks * n_solvers);

    std::atomic<std::size_t> next_task{0};
    std::atomic<bool> failed{false};
    auto worker = [&]() {
        for (;;) {
            const std::size_t task = next_task.fetch_add(1);
            if (task >= n_tasks) return;
            const std::size_t gp_idx = task / static_cast<std::size_t>(trials);
            const std::int64_t trial =
                static_cast<std::int64_t>(task % static_cast<std::size_t>(trials));
            const GridPoint& gp = points[gp_idx];
            SplitMix64 rng =
                SplitMix64::substream(gp.cfg.seed, static_cast<std::uint64_t>(trial), 0);
            const SystemInstance inst = channel::build_instance(gp.cfg, rng);
            for (std::size_t s = 0; s < n_solvers; ++s) {
                ResultRow row = run_one(spec, gp, trial, spec.solvers[s], inst);
                if (!row.error.empty()) failed = true;
                table.rows[task * n_solvers + s] = std::move(row);
            }
        }
    };

    const int nthreads = std::min<int>(spec.threads, static_cast<int>(n_tasks));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    table.any_failure = failed.load();

    // Aggregate per (grid point, solver) in row order; rows are already
    // sorted by construction, so this is thread-count independent.
    for (std::size_t gp_idx = 0; gp_idx < points.size(); ++gp_idx) {
        for (std::size_t s = 0; s < n_solvers; ++s) {
            Summary sum;
            sum.experiment = points[gp_idx].label;
            sum.solver = to_string(spec.solvers[s]);
            sum.m = points[gp_idx].cfg.m;
            sum.n_t = points[gp_idx].cfg.n_t;
            sum.p_dbm = points[gp_idx].cfg.p_dbm;
            double acc = 0.0, acc2 = 0.0, it = 0.0, bu = 0.0;
            int n = 0;
            for (int t = 0; t < trials; ++t) {
                const ResultRow& row =
                    table.rows[(gp_idx * static_cast<std::size_t>(trials) +
                                static_cast<std::size_t>(t)) *
                                   n_solvers +
                               s];
                if (!row.error.empty()) continue;
                acc += row.rate_bps_hz;
                acc2 += row.rate_bps_hz * row.rate_bps_hz;
                it += row.iterations;
                bu += static_cast<double>(row.block_updates);
                ++n;
            }
            sum.trials = n;
            if (n > 0) {
                sum.mean_rate = acc / n;
                const double var = n > 1 ? (acc2 - acc * acc / n) / (n - 1) : 0.0;
                sum.std_rate = std::sqrt(std::max(0.0, var));
                sum.mean_iterations = it / n;
                sum.mean_block_updates = bu / n;
            }
            table.summaries.push_back(std::move(sum));
        }
    }
    return table;
}

namespace {

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::ofstream open_output(const std::string& path) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    return out;
}

} // namespace

void write_csv(const ResultTable& table, const std::string& path, bool emit_timing) {
    std::ofstream out = open_output(path);
    out << "experiment,trial,solver,m,n_t,p_dbm,rate_bps_hz,iterations,block_updates,wall_ms\n";
    for (const ResultRow& r : table.rows) {
        out << r.experiment << ',' << r.trial << ',' << r.solver << ',' << r.m << ','
            << r.n_t << ',' << fmt12(r.p_dbm) << ',' << fmt12(r.rate_bps_hz) << ','
            << r.iterations << ',' << r.block_updates << ','
            << fmt12(emit_timing ? r.wall_ms : 0.0) << '\n';
    }
    out << "# summary_columns: experiment,solver,m,n_t,p_dbm,trials,mean_rate,std_rate,"
           "mean_iterations,mean_block_updates\n";
    for (const Summary& s : table.summaries) {
        out << "# summary," << s.experiment << ',' << s.solver << ',' << s.m << ','
            << s.n_t << ',' << fmt12(s.p_dbm) << ',' << s.trials << ','
            << fmt12(s.mean_rate) << ',' << fmt12(s.std_rate) << ','
            << fmt12(s.mean_iterations) << ',' << fmt12(s.mean_block_updates) << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

void write_jsonl(const ResultTable& table, const std::string& path, bool emit_timing) {
    std::ofstream out = open_output(path);
    for (const ResultRow& r : table.rows) {
        nlohmann::ordered_json j;
        j["type"] = "row";
        j["experiment"] = r.experiment;
        j["trial"] = r.trial;
        j["trial_seed"] = r.trial_seed;
        j["solver"] = r.solver;
        j["m"] = r.m;
        j["n_t"] = r.n_t;
        j["p_dbm"] = r.p_dbm;
        if (std::isnan(r.rate_bps_hz)) j["rate_bps_hz"] = nullptr;
        else j["rate_bps_hz"] = r.rate_bps_hz;
        j["iterations"] = r.iterations;
        j["block_updates"] = r.block_updates;
        j["wall_ms"] = emit_timing ? r.wall_ms : 0.0;
        if (!r.objective_history.empty()) j["objective_history"] = r.objective_history;
        if (!r.error.empty()) j["error"] = r.error;
        out << j.dump() << '\n';
    }
    for (const Summary& s : table.summaries) {
        nlohmann::ordered_json j;
        j["type"] = "summary";
        j["experiment"] = s.experiment;
        j["solver"] = s.solver;
        j["m"] = s.m;
        j["n_t"] = s.n_t;
        j["p_dbm"] = s.p_dbm;
        j["trials"] = s.trials;
        j["mean_rate"] = s.mean_rate;
        j["std_rate"] = s.std_rate;
        j["mean_iterations"] = s.mean_iterations;
        j["mean_block_updates"] = s.mean_block_updates;
        out << j.dump() << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

nlohmann::ordered_json summary_json(const ResultTable& table) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Summary& s : table.summaries) {
        nlohmann::ordered_json j;
        j["experiment"] = s.experiment;
        j["solver"] = s.solver;
        j["m"] = s.m;
        j["n_t"] = s.n_t;
        j["p_dbm"] = s.p_dbm;
        j["trials"] = s.trials;
        j["mean_rate"] = s.mean_rate;
        j["std_rate"] = s.std_rate;
        j["mean_iterations"] = s.mean_iterations;
        j["mean_block_updates"] = s.mean_block_updates;
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace irsec::harness
