// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "selfcheck.hpp"

#include <cmath>
#include <numbers>

#include "channel.hpp"
#include "model.hpp"
#include "rng.hpp"
#include "solver.hpp"

namespace irsec::selfcheck {

namespace {

using linalg::CVec;

channel::SystemInstance random_instance(SplitMix64& rng, int m, int n_t) {
    channel::ScenarioConfig cfg;
    cfg.n_t = n_t;
    cfg.m = m;
    cfg.p_dbm = 5.0;
    cfg.alpha = 4.0;
    cfg.r_tr = 40.0;
    cfg.r_rl = 25.0;
    cfg.r_re = 20.0;
    cfg.seed = rng.next_u64();
    SplitMix64 sub(cfg.seed);
    return channel::build_instance(cfg, sub);
}

model::PhaseVector random_phases(SplitMix64& rng, int m) {
    std::vector<double> theta(static_cast<std::size_t>(m));
    for (double& t : theta) t = (2.0 * rng.next_unit() - 1.0) * std::numbers::pi;
    return model::PhaseVector(std::move(theta));
}

model::Beamformer random_full_power(SplitMix64& rng, std::size_t n, double p) {
    CVec f(n);
    for (auto& z : f) z = rng.next_cgauss();
    linalg::scale(f, std::sqrt(p) / linalg::norm(f));
    return model::Beamformer::from_vector(std::move(f));
}

nlohmann::ordered_json check_phase_update(SplitMix64& rng) {
    constexpr int kSets = 200;
    constexpr int kGrid = 100000;
    double worst = 0.0;
    for (int i = 0; i < kSets; ++i) {
        const auto inst = random_instance(rng, 2 + static_cast<int>(rng.next_u64() % 7), 3);
        const auto phases = random_phases(rng, inst.m());
        const auto f = random_full_power(rng, inst.g.cols(), inst.p);
        const int k = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(inst.m()));
        const auto coeffs = solver::phase_coefficients(inst, f, phases, k);
        const double theta = solver::optimal_phase_k(coeffs);
        const double got = coeffs.ratio_at(theta);
        double best = -1.0;
        for (int gidx = 0; gidx < kGrid; ++gidx) {
            const double t = -std::numbers::pi + (2.0 * std::numbers::pi * gidx) / kGrid;
            best = std::max(best, coeffs.ratio_at(t));
        }
        worst = std::max(worst, (best - got) / best);
    }
    nlohmann::ordered_json j;
    j["sets"] = kSets;
    j["grid_points"] = kGrid;
    j["max_relative_shortfall"] = worst;
    j["pass"] = worst <= 1e-9;
    return j;
}

nlohmann::ordered_json check_beamformer(SplitMix64& rng) {
    constexpr int kInstances = 50;
    constexpr int kSamples = 2000;
    double worst = 0.0;
    for (int i = 0; i < kInstances; ++i) {
        const auto inst = random_instance(rng, 4, 2 + static_cast<int>(rng.next_u64() % 4));
        const auto phases = random_phases(rng, inst.m());
        const auto f_star = model::optimal_beamformer(inst, phases);
        const double star = model::objective_ratio(inst, f_star, phases);
        double best = 0.0;
        for (int s = 0; s < kSamples; ++s) {
            const auto f = random_full_power(rng, inst.g.cols(), inst.p);
            best = std::max(best, model::objective_ratio(inst, f, phases));
        }
        worst = std::max(worst, (best - star) / best);
    }
    nlohmann::ordered_json j;
    j["instances"] = kInstances;
    j["random_beamformers"] = kSamples;
    j["max_relative_shortfall"] = worst;
    j["pass"] = worst <= 1e-9;
    return j;
}

nlohmann::ordered_json check_form_equivalence(SplitMix64& rng) {
    constexpr int kCases = 200;
    double worst = 0.0;
    for (int i = 0; i < kCases; ++i) {
        const auto inst = random_instance(rng, 3 + static_cast<int>(rng.next_u64() % 6), 3);
        const auto phases = random_phases(rng, inst.m());
        const auto f = random_full_power(rng, inst.g.cols(), inst.p);
        const double direct = model::objective_ratio(inst, f, phases);
        const auto forms = model::build_quadratic_forms(inst, f.f);
        const double quad = model::quadratic_ratio(forms, phases.v());
        worst = std::max(worst, std::abs(direct - quad) / direct);
    }
    nlohmann::ordered_json j;
    j["cases"] = kCases;
    j["max_relative_deviation"] = worst;
    j["pass"] = worst <= 1e-10;
    return j;
}

nlohmann::ordered_json check_rayleigh_moments(std::uint64_t seed) {
    constexpr std::size_t kDraws = 100000;
    SplitMix64 rng(seed);
    const linalg::CMat draws = channel::sample_rayleigh(rng, kDraws, 1, 1.0);
    double power = 0.0, re = 0.0;
    for (std::size_t i = 0; i < kDraws; ++i) {
        power += std::norm(draws(i, 0));
        re += draws(i, 0).real();
    }
    power /= kDraws;
    re /= kDraws;
    nlohmann::ordered_json j;
    j["draws"] = kDraws;
    j["mean_power"] = power;
    j["mean_real"] = re;
    j["pass"] = power > 0.99 && power < 1.01 && std::abs(re) < 0.01;
    return j;
}

nlohmann::ordered_json check_unit_conversions() {
    struct Case {
        double in, expect, got;
    };
    const Case dbm[] = {{0.0, 1.0, channel::dbm_to_linear(0.0)},
                        {-80.0, 1e-8, channel::dbm_to_linear(-80.0)},
                        {5.0, std::pow(10.0, 0.5), channel::dbm_to_linear(5.0)}};
    bool pass = true;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const Case& c : dbm) {
        const bool ok = std::abs(c.got - c.expect) <= 1e-12 * c.expect;
        pass = pass && ok;
        rows.push_back({{"dbm", c.in}, {"linear_mw", c.got}, {"expected", c.expect}});
    }
    const Case plg[] = {{10.0, 1.0, channel::path_loss_gain(10.0, 4.0)},
                        {100.0, 0.01, channel::path_loss_gain(100.0, 2.0)},
                        {250.0, 2.56e-6, channel::path_loss_gain(250.0, 4.0)}};
    nlohmann::ordered_json rows2 = nlohmann::ordered_json::array();
    for (const Case& c : plg) {
        const bool ok = std::abs(c.got - c.expect) <= 1e-12 * c.expect;
        pass = pass && ok;
        rows2.push_back({{"d_meters", c.in}, {"gain", c.got}, {"expected", c.expect}});
    }
    nlohmann::ordered_json j;
    j["values_checked"] = 6;
    j["dbm_to_linear"] = rows;
    j["path_loss_gain"] = rows2;
    j["pass"] = pass;
    return j;
}

} // namespace

nlohmann::ordered_json run(std::uint64_t seed) {
    SplitMix64 rng(seed);
    nlohmann::ordered_json report;
    report["seed"] = seed;
    report["phase_update_vs_grid"] = check_phase_update(rng);
    report["beamformer_vs_random_search"] = check_beamformer(rng);
    report["ratio_form_equivalence"] = check_form_equivalence(rng);
    report["rayleigh_moments"] = check_rayleigh_moments(seed ^ 0x5bf0'3635'dcf2'6e4bULL);
    report["unit_conversions"] = check_unit_conversions();
    bool pass = true;
    for (const char* key : {"phase_update_vs_grid", "beamformer_vs_random_search",
                            "ratio_form_equivalence", "rayleigh_moments", "unit_conversions"})
        pass = pass && report[key]["pass"].get<bool>();
    report["pass"] = pass;
    return report;
}

} // namespace irsec::selfcheck
