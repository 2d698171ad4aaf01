// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IRSEC_SOLVER_HPP
#define IRSEC_SOLVER_HPP

#include <cstdint>
#include <vector>

#include "model.hpp"

namespace irsec::solver {

using channel::SystemInstance;

/// Shared by both solvers so convergence comparisons are apples to apples.
/// Convergence is declared when the relative increment of the rate ratio
/// across one full outer iteration drops below epsilon.
struct SolverOptions {
    double epsilon = 1e-6;
    int max_iterations = 10000;
    /// Record the objective after every block update instead of once per
    /// outer iteration.
    bool trace_per_block = false;
};

struct SolveTrace {
    std::vector<double> objective_history; ///< rate ratio; granularity per options
    double secrecy_rate_final = 0.0;       ///< bits/s/Hz
    int iterations = 0;                    ///< outer iterations performed
    std::int64_t block_updates = 0;        ///< total block updates across all iterations
    bool converged = false;
    double wall_ms = 0.0;
};

struct SolveResult {
    model::Beamformer beamformer;
    model::PhaseVector phases;
    SolveTrace trace;

    SolveResult(model::Beamformer f, model::PhaseVector ph, SolveTrace tr)
        : beamformer(std::move(f)), phases(std::move(ph)), trace(std::move(tr)) {}
};

// -------- element-wise block coordinate descent --------

/// Constants of the single-element objective slice
///   ratio(theta_k) = (c_l + d_l cos(theta_k + p_l)) / (c_e + d_e cos(theta_k + p_e)).
/// By construction c_i >= 1/2 and c_i > d_i >= 0, so the denominator stays
/// positive for every angle.
struct PhaseCoefficients {
    double c_l = 0.0, c_e = 0.0;
    double d_l = 0.0, d_e = 0.0;
    double p_l = 0.0, p_e = 0.0;

    bool degenerate() const { return d_l == 0.0 && d_e == 0.0; }
    double ratio_at(double theta) const;
};

/// Coefficients of the objective as a function of theta_k alone, with
/// every other phase and the beamformer held fixed. k is zero-based.
PhaseCoefficients phase_coefficients(const SystemInstance& inst,
                                     const model::Beamformer& f,
                                     const model::PhaseVector& phases, int k);

/// Global maximizer of the cosine-ratio slice. The stationary candidates
/// come from A sin(t) + B cos(t) = d_l d_e sin(p_e - p_l); the winner is
/// picked by direct evaluation, which sidesteps quadrant pitfalls in the
/// closed-form branch rule. Degenerate slices (constant objective) return 0.
double optimal_phase_k(const PhaseCoefficients& coeffs);

/// Alternates the closed-form beamformer with one ascending pass of
/// single-element phase updates (k = 0..M-1, fixed order).
SolveResult solve_bcd(const SystemInstance& inst, const SolverOptions& opts = {});

// -------- alternating optimization with minorization maximization --------

struct MMState {
    linalg::CVec v_z;         ///< current unit-modulus iterate
    linalg::CVec w;           ///< ascent direction for max Re(w^H v)
    double lambda_max_ye = 0; ///< largest eigenvalue of Y_e
};

/// Surrogate value f(v | v_z): affine in v once ||v||^2 is fixed, touching
/// the quadratic ratio at v = v_z after adding g(v_z) - f(v_z | v_z).
double surrogate_value(const linalg::CVec& v, const linalg::CVec& v_z,
                       const model::QuadraticForms& forms);

/// Direction whose phase pattern maximizes the surrogate under the
/// unit-modulus constraint.
MMState mm_direction(const model::QuadraticForms& forms, const linalg::CVec& v_z);

/// argmax of Re(w^H v) over |v_k| = 1: v_k = e^{j arg(w_k)}. Entries with
/// w_k = 0 keep the phase of v_z (every phase is optimal there).
linalg::CVec mm_phase_update(const MMState& state);

/// Alternates the closed-form beamformer with one minorize-maximize step
/// on the whole phase vector (two blocks per iteration).
SolveResult solve_aomm(const SystemInstance& inst, const SolverOptions& opts = {});

} // namespace irsec::solver

#endif
