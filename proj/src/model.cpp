// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "model.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include "errors.hpp"

namespace irsec::model {

using linalg::cplx;
using linalg::CMat;
using linalg::CVec;

double wrap_angle(double theta) {
    double w = std::remainder(theta, 2.0 * std::numbers::pi);
    if (w <= -std::numbers::pi) w = std::numbers::pi; // remainder may return -pi
    return w;
}

PhaseVector::PhaseVector(std::vector<double> theta) : theta_(std::move(theta)) {
    if (theta_.empty()) throw InvalidArgument("PhaseVector: empty");
    for (double& t : theta_) {
        if (!std::isfinite(t)) throw InvalidArgument("PhaseVector: non-finite angle");
        t = wrap_angle(t);
    }
}

PhaseVector PhaseVector::zeros(int m) {
    return PhaseVector(std::vector<double>(static_cast<std::size_t>(m), 0.0));
}

PhaseVector PhaseVector::from_v(const CVec& v) {
    std::vector<double> theta(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) theta[k] = -std::arg(v[k]);
    return PhaseVector(std::move(theta));
}

void PhaseVector::set(int k, double theta_k) {
    theta_[static_cast<std::size_t>(k)] = wrap_angle(theta_k);
}

CVec PhaseVector::v() const {
    CVec out(theta_.size());
    for (std::size_t k = 0; k < theta_.size(); ++k) out[k] = std::polar(1.0, -theta_[k]);
    return out;
}

CVec PhaseVector::phi_diag() const {
    CVec out(theta_.size());
    for (std::size_t k = 0; k < theta_.size(); ++k) out[k] = std::polar(1.0, theta_[k]);
    return out;
}

Beamformer Beamformer::from_vector(CVec f) {
    Beamformer b;
    b.power = linalg::norm2(f);
    b.f = std::move(f);
    return b;
}

CMat reflect_matrix(const SystemInstance& inst, Receiver which) {
    const CVec& h = which == Receiver::legit ? inst.h_l : inst.h_e;
    const std::size_t m = inst.g.rows(), n = inst.g.cols();
    if (h.size() != m) throw InvalidArgument("reflect_matrix: dimension mismatch");
    CMat r(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        const cplx hc = std::conj(h[i]);
        for (std::size_t j = 0; j < n; ++j) r(i, j) = hc * inst.g(i, j);
    }
    return r;
}

CVec effective_channel(const SystemInstance& inst, const PhaseVector& phases,
                       Receiver which) {
    const CVec& h = which == Receiver::legit ? inst.h_l : inst.h_e;
    const std::size_t m = inst.g.rows(), n = inst.g.cols();
    if (h.size() != m || static_cast<std::size_t>(phases.size()) != m)
        throw InvalidArgument("effective_channel: dimension mismatch");
    // c = G^H Phi^H h, i.e. c_n = sum_m conj(G(m,n)) e^{-j theta_m} h_m
    CVec c(n);
    for (std::size_t i = 0; i < m; ++i) {
        const cplx w = std::polar(1.0, -phases.theta(static_cast<int>(i))) * h[i];
        for (std::size_t j = 0; j < n; ++j) c[j] += std::conj(inst.g(i, j)) * w;
    }
    return c;
}

namespace {

double snr_term(const CVec& eff, const CVec& f, double sigma2) {
    return std::norm(linalg::inner(eff, f)) / sigma2;
}

} // namespace

double objective_ratio(const SystemInstance& inst, const Beamformer& f,
                       const PhaseVector& phases) {
    const CVec c_l = effective_channel(inst, phases, Receiver::legit);
    const CVec c_e = effective_channel(inst, phases, Receiver::eaves);
    const double num = 1.0 + snr_term(c_l, f.f, inst.sigma2_l);
    const double den = 1.0 + snr_term(c_e, f.f, inst.sigma2_e);
    return num / den;
}

double secrecy_rate(const SystemInstance& inst, const Beamformer& f,
                    const PhaseVector& phases) {
    return std::max(0.0, std::log2(objective_ratio(inst, f, phases)));
}

CMat build_x(const SystemInstance& inst, const PhaseVector& phases, Receiver which) {
    const CVec a = effective_channel(inst, phases, which);
    const double sigma2 = which == Receiver::legit ? inst.sigma2_l : inst.sigma2_e;
    const double beta = inst.p / sigma2;
    const std::size_t n = a.size();
    CMat x = CMat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) += beta * a[i] * std::conj(a[j]);
    return x;
}

QuadraticForms build_quadratic_forms(const CMat& r_l, const CMat& r_e,
                                     double sigma2_l, double sigma2_e, const CVec& f) {
    QuadraticForms forms;
    forms.m = static_cast<int>(r_l.rows());
    forms.r_l = r_l;
    forms.r_e = r_e;
    forms.u_l = r_l * f;
    forms.u_e = r_e * f;
    forms.sigma2_l = sigma2_l;
    forms.sigma2_e = sigma2_e;
    forms.lambda_max_ye = 1.0 / forms.m + linalg::norm2(forms.u_e) / sigma2_e;
    return forms;
}

QuadraticForms build_quadratic_forms(const SystemInstance& inst, const CVec& f) {
    if (f.size() != inst.g.cols())
        throw InvalidArgument("build_quadratic_forms: beamformer length mismatch");
    return build_quadratic_forms(reflect_matrix(inst, Receiver::legit),
                                 reflect_matrix(inst, Receiver::eaves), inst.sigma2_l,
                                 inst.sigma2_e, f);
}

CVec QuadraticForms::apply_yl(const CVec& v) const {
    const cplx c = linalg::inner(u_l, v) / sigma2_l;
    CVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / static_cast<double>(m) + c * u_l[i];
    return out;
}

CVec QuadraticForms::apply_ye(const CVec& v) const {
    const cplx c = linalg::inner(u_e, v) / sigma2_e;
    CVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / static_cast<double>(m) + c * u_e[i];
    return out;
}

namespace {

CMat rank_one_plus_scaled_identity(const CVec& u, double scale, double diag) {
    const std::size_t n = u.size();
    CMat y(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) y(i, j) = scale * u[i] * std::conj(u[j]);
        y(i, i) += diag;
    }
    return y;
}

} // namespace

CMat QuadraticForms::y_l() const {
    return rank_one_plus_scaled_identity(u_l, 1.0 / sigma2_l, 1.0 / m);
}

CMat QuadraticForms::y_e() const {
    return rank_one_plus_scaled_identity(u_e, 1.0 / sigma2_e, 1.0 / m);
}

double quadratic_ratio(const QuadraticForms& forms, const CVec& v) {
    const double num = linalg::inner(v, forms.apply_yl(v)).real();
    const double den = linalg::inner(v, forms.apply_ye(v)).real();
    return num / den;
}

namespace {

/// Deterministic unit vector orthogonal to the (orthonormal) columns in
/// `basis`: orthogonalize standard basis vectors until one survives.
CVec orthogonal_complement_vector(const std::vector<CVec>& basis, std::size_t n) {
    for (std::size_t cand = 0; cand < n; ++cand) {
        CVec e(n);
        e[cand] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const CVec& q : basis) {
                const cplx proj = linalg::inner(q, e);
                for (std::size_t i = 0; i < n; ++i) e[i] -= proj * q[i];
            }
        const double nrm = linalg::norm(e);
        if (nrm > 0.5) {
            linalg::scale(e, 1.0 / nrm);
            return e;
        }
    }
    throw NumericalError("optimal_beamformer: failed to complete orthogonal basis");
}

/// Largest eigenpair of a Hermitian 2x2 [[a, g], [conj(g), b]].
void herm2_dominant(double a, double b, cplx g, double& lambda, cplx& y0, cplx& y1) {
    const double mean = 0.5 * (a + b);
    const double disc = std::hypot(0.5 * (a - b), std::abs(g));
    lambda = mean + disc;
    // (A - lambda I) y = 0; pick the better-conditioned row.
    const cplx r0[2] = {cplx(a - lambda, 0.0), g};
    const cplx r1[2] = {std::conj(g), cplx(b - lambda, 0.0)};
    const double n0 = std::abs(r0[0]) + std::abs(r0[1]);
    const double n1 = std::abs(r1[0]) + std::abs(r1[1]);
    if (n0 >= n1 && n0 > 0.0) {
        y0 = -r0[1];
        y1 = r0[0];
    } else if (n1 > 0.0) {
        y0 = -r1[1];
        y1 = r1[0];
    } else { // A == lambda I
        y0 = 1.0;
        y1 = 0.0;
    }
    const double nrm = std::sqrt(std::norm(y0) + std::norm(y1));
    y0 /= nrm;
    y1 /= nrm;
}

} // namespace

BeamformerSolution optimal_beamformer_for_channels(const CVec& c_l, const CVec& c_e,
                                                   double sigma2_l, double sigma2_e,
                                                   double p) {
    if (c_l.size() != c_e.size())
        throw InvalidArgument("optimal_beamformer_for_channels: dimension mismatch");
    if (!(sigma2_l > 0.0) || !(sigma2_e > 0.0) || !(p > 0.0))
        throw InvalidArgument("optimal_beamformer_for_channels: powers must be > 0");
    const std::size_t n = c_l.size();
    const double beta_l = p / sigma2_l;
    const double beta_e = p / sigma2_e;

    // Orthonormal basis of span{c_l, c_e} (modified Gram-Schmidt, two passes).
    std::vector<CVec> basis;
    for (const CVec* c : {&c_l, &c_e}) {
        CVec w = *c;
        const double scale0 = linalg::norm(w);
        if (scale0 == 0.0) continue;
        for (int pass = 0; pass < 2; ++pass)
            for (const CVec& q : basis) {
                const cplx proj = linalg::inner(q, w);
                for (std::size_t i = 0; i < n; ++i) w[i] -= proj * q[i];
            }
        const double nrm = linalg::norm(w);
        if (nrm > 1e-13 * scale0) {
            linalg::scale(w, 1.0 / nrm);
            basis.push_back(std::move(w));
        }
    }

    CVec dir;
    double lambda = 1.0;
    if (basis.empty()) {
        // Both channels vanish; any full-power direction attains ratio 1.
        dir.assign(n, cplx{});
        dir[0] = 1.0;
    } else {
        const std::size_t r = basis.size();
        // Reduced problem on the span: X_i = I_r + beta_i bi bi^H, bi = Q^H c_i.
        std::vector<cplx> bl(r), be(r);
        for (std::size_t i = 0; i < r; ++i) {
            bl[i] = linalg::inner(basis[i], c_l);
            be[i] = linalg::inner(basis[i], c_e);
        }
        std::vector<cplx> y(r);
        if (r == 1) {
            lambda = (1.0 + beta_l * std::norm(bl[0])) / (1.0 + beta_e * std::norm(be[0]));
            y[0] = 1.0;
        } else {
            // Cholesky of Xe = [[1+be0^2, c], [conj(c), 1+be1^2]] then the
            // 2x2 Hermitian eigenproblem of L^{-1} Xl L^{-H}.
            const double e00 = 1.0 + beta_e * std::norm(be[0]);
            const double e11 = 1.0 + beta_e * std::norm(be[1]);
            const cplx e01 = beta_e * be[0] * std::conj(be[1]);
            const double l00 = std::sqrt(e00);
            const cplx l10 = std::conj(e01) / l00;
            const double l11 = std::sqrt(e11 - std::norm(l10));

            const double a00 = 1.0 + beta_l * std::norm(bl[0]);
            const double a11 = 1.0 + beta_l * std::norm(bl[1]);
            const cplx a01 = beta_l * bl[0] * std::conj(bl[1]);

            // C = L^{-1} A L^{-H} entrywise, via W = L^{-1} A.
            const cplx w00 = a00 / l00;
            const cplx w01 = a01 / l00;
            const cplx w10 = (std::conj(a01) - l10 * w00) / l11;
            const cplx w11 = (a11 - l10 * w01) / l11;
            const double c00 = (w00 / l00).real();
            const cplx c01 = (w01 - w00 * std::conj(l10) / l00) / l11;
            const double c11 = ((w11 - w10 * std::conj(l10) / l00) / l11).real();

            double lam;
            cplx z0, z1;
            herm2_dominant(c00, c11, c01, lam, z0, z1);
            lambda = lam;
            // y = L^{-H} z
            const cplx y1v = z1 / l11;
            const cplx y0v = (z0 - std::conj(l10) * y1v) / l00;
            y[0] = y0v;
            y[1] = y1v;
        }

        if (lambda >= 1.0 || r == n) {
            dir.assign(n, cplx{});
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t k = 0; k < n; ++k) dir[k] += basis[i][k] * y[i];
            linalg::scale(dir, 1.0 / linalg::norm(dir));
        } else {
            // Staying orthogonal to both channels (ratio exactly 1) beats the
            // best in-span ratio; possible once the legitimate channel is the
            // weaker direction.
            dir = orthogonal_complement_vector(basis, n);
            lambda = 1.0;
        }
    }

    linalg::canonicalize_phase(dir);
    linalg::scale(dir, std::sqrt(p));
    BeamformerSolution sol;
    sol.f = Beamformer::from_vector(std::move(dir));
    sol.ratio = lambda;
    return sol;
}

Beamformer optimal_beamformer(const SystemInstance& inst, const PhaseVector& phases) {
    const CVec a_l = effective_channel(inst, phases, Receiver::legit);
    const CVec a_e = effective_channel(inst, phases, Receiver::eaves);
    return optimal_beamformer_for_channels(a_l, a_e, inst.sigma2_l, inst.sigma2_e, inst.p)
        .f;
}

PhaseVector initial_phases(const SystemInstance& inst) {
    const CMat r_l = reflect_matrix(inst, Receiver::legit);
    if (r_l.frobenius_norm() == 0.0) {
        std::cerr << "irsec: initial_phases: R_l is zero, falling back to zero phases\n";
        return PhaseVector::zeros(inst.m());
    }
    const CVec u = linalg::dominant_left_singular(r_l);
    std::vector<double> theta(u.size());
    // angle(v) = angle(u); with v_k = e^{-j theta_k} this is theta_k = -arg(u_k).
    for (std::size_t k = 0; k < u.size(); ++k) theta[k] = -std::arg(u[k]);
    return PhaseVector(std::move(theta));
}

} // namespace irsec::model
