// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IRSEC_CHANNEL_HPP
#define IRSEC_CHANNEL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "linalg.hpp"
#include "rng.hpp"

namespace irsec::channel {

/// Scenario geometry and radio parameters driving one Monte Carlo study.
/// Distances are meters, powers dBm. Path-loss gain is normalized to 1 at
/// the 10 m reference distance so rates are reproducible from this struct
/// alone. r_tl / r_te are only needed when the no-IRS baseline runs.
struct ScenarioConfig {
    int n_t = 0;                ///< transmit antennas
    int m = 0;                  ///< IRS reflecting elements
    double p_dbm = 0.0;         ///< transmit power budget
    double noise_l_dbm = -80.0; ///< legitimate receiver noise power
    double noise_e_dbm = -80.0; ///< eavesdropper noise power
    double alpha = 0.0;         ///< path-loss exponent
    double r_tr = 0.0;          ///< transmitter -> IRS distance
    double r_rl = 0.0;          ///< IRS -> legitimate receiver distance
    double r_re = 0.0;          ///< IRS -> eavesdropper distance
    std::optional<double> r_tl; ///< transmitter -> legitimate (direct path)
    std::optional<double> r_te; ///< transmitter -> eavesdropper (direct path)
    std::uint64_t seed = 0;
    int trials = 1;

    void validate() const; // throws InvalidArgument

    /// Strict parse: unknown keys are rejected with a diagnostic naming them.
    static ScenarioConfig from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;
};

/// One channel realization. All powers are linear milliwatts; only ratios
/// enter the rate expressions, the unit is fixed so intermediate values can
/// be logged and compared.
struct SystemInstance {
    linalg::CMat g;        ///< transmitter -> IRS, M x N_t
    linalg::CVec h_l;      ///< IRS -> legitimate receiver, length M
    linalg::CVec h_e;      ///< IRS -> eavesdropper, length M
    double sigma2_l = 0.0; ///< noise variance at legitimate receiver
    double sigma2_e = 0.0; ///< noise variance at eavesdropper
    double p = 0.0;        ///< transmit power budget
    std::optional<linalg::CVec> direct_h_l; ///< length N_t, baseline only
    std::optional<linalg::CVec> direct_h_e; ///< length N_t, baseline only

    int m() const { return static_cast<int>(g.rows()); }
    int n_t() const { return static_cast<int>(g.cols()); }
};

/// 10^(x/10), milliwatts.
double dbm_to_linear(double x_dbm);

/// (d / 10 m)^(-alpha); equals 1 at the reference distance.
double path_loss_gain(double d_meters, double alpha);

/// i.i.d. circularly-symmetric complex Gaussian entries with per-entry
/// variance `gain`. gain = 0 still consumes the same number of draws, so
/// the stream position after the call does not depend on the gain.
linalg::CMat sample_rayleigh(SplitMix64& rng, std::size_t rows, std::size_t cols,
                             double gain);

/// Draw a full realization. Fixed draw order: G, h_l, h_e, then the direct
/// channels when their distances are configured.
SystemInstance build_instance(const ScenarioConfig& cfg, SplitMix64& rng);

} // namespace irsec::channel

#endif
