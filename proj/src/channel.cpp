// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "channel.hpp"

#include <cmath>
#include <set>

#include "errors.hpp"

namespace irsec::channel {

namespace {

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) throw InvalidArgument(std::string("ScenarioConfig: ") + name + " must be finite");
}

void require_positive(double x, const char* name) {
    require_finite(x, name);
    if (!(x > 0.0)) throw InvalidArgument(std::string("ScenarioConfig: ") + name + " must be > 0");
}

double get_number(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number()) throw ParseError(std::string("ScenarioConfig: key '") + key + "' must be a number");
    return v.get<double>();
}

int get_int(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw ParseError(std::string("ScenarioConfig: key '") + key + "' must be an integer");
    return v.get<int>();
}

} // namespace

void ScenarioConfig::validate() const {
    if (n_t < 1) throw InvalidArgument("ScenarioConfig: n_t must be >= 1");
    if (m < 1) throw InvalidArgument("ScenarioConfig: m must be >= 1");
    if (trials < 1) throw InvalidArgument("ScenarioConfig: trials must be >= 1");
    require_finite(p_dbm, "p_dbm");
    require_finite(noise_l_dbm, "noise_l_dbm");
    require_finite(noise_e_dbm, "noise_e_dbm");
    require_positive(alpha, "alpha");
    require_positive(r_tr, "r_tr");
    require_positive(r_rl, "r_rl");
    require_positive(r_re, "r_re");
    if (r_tl) require_positive(*r_tl, "r_tl");
    if (r_te) require_positive(*r_te, "r_te");
}

ScenarioConfig ScenarioConfig::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("ScenarioConfig: expected a JSON object");
    static const std::set<std::string> known = {
        "n_t", "m", "p_dbm", "noise_l_dbm", "noise_e_dbm", "alpha",
        "r_tr", "r_rl", "r_re", "r_tl", "r_te", "seed", "trials"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!known.count(key))
            throw ParseError("ScenarioConfig: unknown key '" + key + "'");
    }

    ScenarioConfig cfg;
    try {
        cfg.n_t = get_int(j, "n_t");
        cfg.m = get_int(j, "m");
        cfg.p_dbm = get_number(j, "p_dbm");
        cfg.alpha = get_number(j, "alpha");
        cfg.r_tr = get_number(j, "r_tr");
        cfg.r_rl = get_number(j, "r_rl");
        cfg.r_re = get_number(j, "r_re");
        if (j.contains("noise_l_dbm")) cfg.noise_l_dbm = get_number(j, "noise_l_dbm");
        if (j.contains("noise_e_dbm")) cfg.noise_e_dbm = get_number(j, "noise_e_dbm");
        if (j.contains("r_tl")) cfg.r_tl = get_number(j, "r_tl");
        if (j.contains("r_te")) cfg.r_te = get_number(j, "r_te");
        if (j.contains("seed")) {
            const auto& v = j.at("seed");
            if (!v.is_number_unsigned() &&
                !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
                throw ParseError("ScenarioConfig: key 'seed' must be a nonnegative integer");
            cfg.seed = v.get<std::uint64_t>();
        }
        if (j.contains("trials")) cfg.trials = get_int(j, "trials");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ScenarioConfig: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

nlohmann::ordered_json ScenarioConfig::to_json() const {
    nlohmann::ordered_json j;
    j["n_t"] = n_t;
    j["m"] = m;
    j["p_dbm"] = p_dbm;
    j["noise_l_dbm"] = noise_l_dbm;
    j["noise_e_dbm"] = noise_e_dbm;
    j["alpha"] = alpha;
    j["r_tr"] = r_tr;
    j["r_rl"] = r_rl;
    j["r_re"] = r_re;
    if (r_tl) j["r_tl"] = *r_tl;
    if (r_te) j["r_te"] = *r_te;
    j["seed"] = seed;
    j["trials"] = trials;
    return j;
}

double dbm_to_linear(double x_dbm) { return std::pow(10.0, x_dbm / 10.0); }

double path_loss_gain(double d_meters, double alpha) {
    if (!(d_meters > 0.0)) throw InvalidArgument("path_loss_gain: distance must be > 0");
    return std::pow(d_meters / 10.0, -alpha);
}

linalg::CMat sample_rayleigh(SplitMix64& rng, std::size_t rows, std::size_t cols,
                             double gain) {
    if (gain < 0.0) throw InvalidArgument("sample_rayleigh: gain must be >= 0");
    const double amp = std::sqrt(gain);
    linalg::CMat out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = amp * rng.next_cgauss();
    return out;
}

namespace {

linalg::CVec sample_vector(SplitMix64& rng, std::size_t len, double gain) {
    linalg::CMat m = sample_rayleigh(rng, len, 1, gain);
    linalg::CVec v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = m(i, 0);
    return v;
}

} // namespace

SystemInstance build_instance(const ScenarioConfig& cfg, SplitMix64& rng) {
    cfg.validate();
    const std::size_t m = static_cast<std::size_t>(cfg.m);
    const std::size_t n_t = static_cast<std::size_t>(cfg.n_t);

    SystemInstance inst;
    inst.g = sample_rayleigh(rng, m, n_t, path_loss_gain(cfg.r_tr, cfg.alpha));
    inst.h_l = sample_vector(rng, m, path_loss_gain(cfg.r_rl, cfg.alpha));
    inst.h_e = sample_vector(rng, m, path_loss_gain(cfg.r_re, cfg.alpha));
    if (cfg.r_tl) inst.direct_h_l = sample_vector(rng, n_t, path_loss_gain(*cfg.r_tl, cfg.alpha));
    if (cfg.r_te) inst.direct_h_e = sample_vector(rng, n_t, path_loss_gain(*cfg.r_te, cfg.alpha));
    inst.sigma2_l = dbm_to_linear(cfg.noise_l_dbm);
    inst.sigma2_e = dbm_to_linear(cfg.noise_e_dbm);
    inst.p = dbm_to_linear(cfg.p_dbm);
    return inst;
}

} // namespace irsec::channel
