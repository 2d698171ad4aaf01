// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "solver.hpp"

namespace irsec::solver {

using linalg::cplx;
using linalg::CVec;
using model::PhaseVector;

double PhaseCoefficients::ratio_at(double theta) const {
    // half-angle form: c + d cos(x) = (c - d) + 2 d cos^2(x/2), a sum of
    // nonnegative terms since c > d, so values near the denominator's
    // minimum do not lose digits to cancellation
    const double cl = std::cos(0.5 * (theta + p_l));
    const double ce = std::cos(0.5 * (theta + p_e));
    const double num = (c_l - d_l) + 2.0 * d_l * cl * cl;
    const double den = (c_e - d_e) + 2.0 * d_e * ce * ce;
    return num / den;
}

namespace {

/// Per-sweep working set: q_m = g_m^H f once per beamformer update, then the
/// running totals S_i = sum_m conj(h_{i,m}) e^{j theta_m} q_m so each element
/// update costs O(1).
struct SweepState {
    CVec q;          // G f
    CVec t_l, t_e;   // per-element terms
    cplx s_l{}, s_e{}; // running sums

    SweepState(const channel::SystemInstance& inst, const CVec& f,
               const PhaseVector& phases) {
        const std::size_t m = inst.g.rows();
        q = inst.g * f;
        t_l.resize(m);
        t_e.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const cplx rot = std::polar(1.0, phases.theta(static_cast<int>(i)));
            t_l[i] = std::conj(inst.h_l[i]) * rot * q[i];
            t_e[i] = std::conj(inst.h_e[i]) * rot * q[i];
            s_l += t_l[i];
            s_e += t_e[i];
        }
    }

    PhaseCoefficients coefficients(const channel::SystemInstance& inst,
                                   std::size_t k) const {
        const cplx rest_l = s_l - t_l[k];
        const cplx rest_e = s_e - t_e[k];
        const cplx self_l = std::conj(inst.h_l[k]) * q[k];
        const cplx self_e = std::conj(inst.h_e[k]) * q[k];
        PhaseCoefficients c;
        c.c_l = 0.5 * (1.0 + (std::norm(self_l) + std::norm(rest_l)) / inst.sigma2_l);
        c.c_e = 0.5 * (1.0 + (std::norm(self_e) + std::norm(rest_e)) / inst.sigma2_e);
        const cplx prod_l = self_l * std::conj(rest_l);
        const cplx prod_e = self_e * std::conj(rest_e);
        c.d_l = std::abs(prod_l) / inst.sigma2_l;
        c.d_e = std::abs(prod_e) / inst.sigma2_e;
        c.p_l = std::arg(prod_l);
        c.p_e = std::arg(prod_e);
        assert(c.c_e > c.d_e);
        return c;
    }

    void apply(const channel::SystemInstance& inst, std::size_t k, double theta) {
        const cplx rot = std::polar(1.0, theta);
        const cplx nl = std::conj(inst.h_l[k]) * rot * q[k];
        const cplx ne = std::conj(inst.h_e[k]) * rot * q[k];
        s_l += nl - t_l[k];
        s_e += ne - t_e[k];
        t_l[k] = nl;
        t_e[k] = ne;
    }
};

} // namespace

PhaseCoefficients phase_coefficients(const channel::SystemInstance& inst,
                                     const model::Beamformer& f,
                                     const PhaseVector& phases, int k) {
    if (k < 0 || k >= inst.m())
        throw InvalidArgument("phase_coefficients: element index out of range");
    if (f.f.size() != inst.g.cols() || phases.size() != inst.m())
        throw InvalidArgument("phase_coefficients: dimension mismatch");
    SweepState state(inst, f.f, phases);
    return state.coefficients(inst, static_cast<std::size_t>(k));
}

double optimal_phase_k(const PhaseCoefficients& coeffs) {
    const double dl = coeffs.d_l, de = coeffs.d_e;
    if (dl == 0.0 && de == 0.0) return 0.0; // slice is constant
    if (de == 0.0) return model::wrap_angle(-coeffs.p_l);
    if (dl == 0.0) return model::wrap_angle(std::numbers::pi - coeffs.p_e);

    const double a = coeffs.c_e * dl * std::cos(coeffs.p_l) - coeffs.c_l * de * std::cos(coeffs.p_e);
    const double b = coeffs.c_e * dl * std::sin(coeffs.p_l) - coeffs.c_l * de * std::sin(coeffs.p_e);
    const double rhs = dl * de * std::sin(coeffs.p_e - coeffs.p_l);
    const double r = std::hypot(a, b);
    if (r < 1e-300) return 0.0; // ratio is constant (c_l d_e == c_e d_l, p_l == p_e)

    double q = rhs / r;
    // |q| <= 1 holds analytically. Spill beyond roundoff means a, b are
    // cancellation noise, which only occurs when the slice is flat (a = b = 0
    // forces rhs = 0), so any angle is as good as any other.
    if (q > 1.0 + 1e-9 || q < -1.0 - 1e-9) return 0.0;
    q = std::clamp(q, -1.0, 1.0);

    const double gamma = std::atan2(a, b);
    const double acq = std::acos(q);
    const double candidates[4] = {gamma - acq, gamma + acq, gamma - acq + std::numbers::pi,
                                  gamma + acq + std::numbers::pi};
    double best_theta = candidates[0];
    double best_val = coeffs.ratio_at(candidates[0]);
    for (int i = 1; i < 4; ++i) {
        const double val = coeffs.ratio_at(candidates[i]);
        if (val > best_val) {
            best_val = val;
            best_theta = candidates[i];
        }
    }
    return model::wrap_angle(best_theta);
}

SolveResult solve_bcd(const SystemInstance& inst, const SolverOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const int m = inst.m();

    PhaseVector phases = model::initial_phases(inst);
    model::Beamformer f = model::Beamformer::from_vector(CVec(inst.g.cols()));
    SolveTrace trace;

    double prev_ratio = -1.0;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        f = model::optimal_beamformer(inst, phases);
        ++trace.block_updates;
        if (opts.trace_per_block)
            trace.objective_history.push_back(model::objective_ratio(inst, f, phases));

        SweepState state(inst, f.f, phases);
        for (int k = 0; k < m; ++k) {
            const PhaseCoefficients coeffs = state.coefficients(inst, static_cast<std::size_t>(k));
            if (!coeffs.degenerate()) {
                const double theta = optimal_phase_k(coeffs);
                assert(coeffs.ratio_at(theta) >=
                       coeffs.ratio_at(phases.theta(k)) -
                           1e-10 * std::abs(coeffs.ratio_at(phases.theta(k))));
                phases.set(k, theta);
                state.apply(inst, static_cast<std::size_t>(k), theta);
            }
            ++trace.block_updates;
            // trace entries always come from the one direct evaluation route;
            // mixing it with the sweep's closed form would inject roundoff
            // disagreements larger than the monotonicity tolerance
            if (opts.trace_per_block)
                trace.objective_history.push_back(model::objective_ratio(inst, f, phases));
        }

        const double ratio = model::objective_ratio(inst, f, phases);
        if (!opts.trace_per_block) trace.objective_history.push_back(ratio);
        trace.iterations = iter + 1;
        if (prev_ratio > 0.0 && (ratio - prev_ratio) / prev_ratio < opts.epsilon) {
            trace.converged = true;
            break;
        }
        prev_ratio = ratio;
    }

    trace.secrecy_rate_final = model::secrecy_rate(inst, f, phases);
    trace.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return SolveResult(std::move(f), std::move(phases), std::move(trace));
}

} // namespace irsec::solver
