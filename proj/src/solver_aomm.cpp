// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <cassert>
#include <chrono>
#include <cmath>
#include <iostream>

#include "errors.hpp"
#include "solver.hpp"

namespace irsec::solver {

using linalg::cplx;
using linalg::CVec;
using model::PhaseVector;
using model::QuadraticForms;

double surrogate_value(const CVec& v, const CVec& v_z, const QuadraticForms& forms) {
    if (v.size() != v_z.size() || static_cast<int>(v.size()) != forms.m)
        throw InvalidArgument("surrogate_value: dimension mismatch");
    const double y_z = linalg::inner(v_z, forms.apply_ye(v_z)).real();
    const double num_z = linalg::inner(v_z, forms.apply_yl(v_z)).real();
    const double coef = num_z / (y_z * y_z);
    const double lam = forms.lambda_max_ye;

    const double term1 = 2.0 * linalg::inner(v_z, forms.apply_yl(v)).real() / y_z;
    const double curly = lam * linalg::norm2(v) +
                         2.0 * (linalg::inner(v_z, forms.apply_ye(v)).real() -
                                lam * linalg::inner(v_z, v).real());
    return term1 - coef * curly;
}

MMState mm_direction(const QuadraticForms& forms, const CVec& v_z) {
    if (static_cast<int>(v_z.size()) != forms.m)
        throw InvalidArgument("mm_direction: dimension mismatch");
    const double y_z = linalg::inner(v_z, forms.apply_ye(v_z)).real();
    const double num_z = linalg::inner(v_z, forms.apply_yl(v_z)).real();
    const double coef = num_z / (y_z * y_z);
    const double lam = forms.lambda_max_ye;

    const CVec yl_vz = forms.apply_yl(v_z);
    const CVec ye_vz = forms.apply_ye(v_z);
    CVec w(v_z.size());
    for (std::size_t k = 0; k < v_z.size(); ++k)
        w[k] = yl_vz[k] / y_z - coef * (ye_vz[k] - lam * v_z[k]);

    MMState state;
    state.v_z = v_z;
    state.w = std::move(w);
    state.lambda_max_ye = lam;
    return state;
}

CVec mm_phase_update(const MMState& state) {
    CVec v(state.w.size());
    std::size_t zeros = 0;
    for (std::size_t k = 0; k < state.w.size(); ++k) {
        if (state.w[k] == cplx{}) {
            v[k] = state.v_z[k];
            ++zeros;
        } else {
            v[k] = std::polar(1.0, std::arg(state.w[k]));
        }
    }
    if (zeros > 0)
        std::cerr << "irsec: mm_phase_update: " << zeros
                  << " zero-direction entries kept their previous phase\n";
    return v;
}

SolveResult solve_aomm(const SystemInstance& inst, const SolverOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();

    const linalg::CMat r_l = model::reflect_matrix(inst, model::Receiver::legit);
    const linalg::CMat r_e = model::reflect_matrix(inst, model::Receiver::eaves);

    PhaseVector phases = model::initial_phases(inst);
    CVec v = phases.v();
    model::Beamformer f = model::Beamformer::from_vector(CVec(inst.g.cols()));
    SolveTrace trace;

    double prev_ratio = -1.0;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        f = model::optimal_beamformer(inst, phases);
        ++trace.block_updates;
        if (opts.trace_per_block)
            trace.objective_history.push_back(model::objective_ratio(inst, f, phases));

        const QuadraticForms forms =
            model::build_quadratic_forms(r_l, r_e, inst.sigma2_l, inst.sigma2_e, f.f);
        const MMState state = mm_direction(forms, v);
        CVec v_next = mm_phase_update(state);
#ifndef NDEBUG
        {
            // minorization chain: g(v+) >= surrogate(v+) + c >= surrogate(v) + c = g(v).
            // The surrogate subtracts intermediates of size ~coef * lambda * M,
            // so the check tolerance has to scale with that magnitude, not
            // with g alone.
            const double g_old = model::quadratic_ratio(forms, v);
            const double g_new = model::quadratic_ratio(forms, v_next);
            const double shift = g_old - surrogate_value(v, v, forms);
            const double s_new = surrogate_value(v_next, v, forms) + shift;
            const double y_z = linalg::inner(v, forms.apply_ye(v)).real();
            const double num_z = linalg::inner(v, forms.apply_yl(v)).real();
            const double magnitude = num_z / (y_z * y_z) * forms.lambda_max_ye * inst.m();
            const double tol = 1e-9 * std::max({1.0, std::abs(g_old), magnitude});
            assert(g_new >= s_new - tol);
            assert(s_new >= g_old - tol);
        }
#endif
        v = std::move(v_next);
        phases = PhaseVector::from_v(v);
        ++trace.block_updates;

        const double ratio = model::objective_ratio(inst, f, phases);
        trace.objective_history.push_back(ratio);
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
