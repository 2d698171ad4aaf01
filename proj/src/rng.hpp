// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IRSEC_RNG_HPP
#define IRSEC_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace irsec {

/// SplitMix64 (Steele, Lea & Flood, OOPSLA 2014), the canonical constants.
/// The full output stream is a pure function of the 64-bit seed, which is
/// what makes every simulation in this project reproducible from its config
/// alone. Gaussian variates come from Box-Muller on the raw uniforms, so
/// they are reproducible too (std::normal_distribution is implementation
/// defined and is deliberately not used).
///
/// Substreams: stream(seed ^ trial) windows never collide for distinct
/// trial indices, because all states live on one orbit of the golden-gamma
/// counter and the window offsets map to astronomically large counter
/// differences. Lane 0 carries channel draws, lane 1 the random-phase
/// baseline draws.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t trial,
                                std::uint64_t lane = 0) {
        return SplitMix64((seed ^ trial) + lane * 0xA3EC647659359ACDULL);
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe as a log() argument.
    double next_unit_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Circularly-symmetric complex Gaussian, zero mean, E|z|^2 = 1.
    std::complex<double> next_cgauss() {
        const double u1 = next_unit_pos();
        const double u2 = next_unit();
        const double r = std::sqrt(-std::log(u1)); // = sqrt(-2 ln u1) / sqrt(2)
        const double phi = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

private:
    std::uint64_t state_;
};

} // namespace irsec

#endif
