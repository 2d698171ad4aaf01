// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Test-side generators and reference oracles. The Eigen-based dense
// decompositions here are the independent route the library's own
// eigensolvers are validated against; production code never links Eigen.

#ifndef IRSEC_TESTS_HELPERS_HPP
#define IRSEC_TESTS_HELPERS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "channel.hpp"
#include "linalg.hpp"
#include "model.hpp"
#include "rng.hpp"

namespace irsec::testing {

using linalg::cplx;
using linalg::CMat;
using linalg::CVec;

inline Eigen::MatrixXcd to_eigen(const CMat& a) {
    Eigen::MatrixXcd m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(static_cast<long>(i), static_cast<long>(j)) = a(i, j);
    return m;
}

inline Eigen::VectorXcd to_eigen(const CVec& v) {
    Eigen::VectorXcd out(static_cast<long>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<long>(i)) = v[i];
    return out;
}

inline CVec from_eigen(const Eigen::VectorXcd& v) {
    CVec out(static_cast<std::size_t>(v.size()));
    for (long i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = v(i);
    return out;
}

/// Dense full-spectrum oracle: largest eigenvalue + eigenvector of a
/// Hermitian matrix via Eigen's tridiagonalization path.
inline std::pair<double, CVec> dense_hermitian_max(const CMat& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(a));
    const long last = es.eigenvalues().size() - 1;
    return {es.eigenvalues()(last), from_eigen(es.eigenvectors().col(last))};
}

/// Dense oracle for the generalized problem: max real eigenvalue of B^{-1}A.
inline double dense_binv_a_max(const CMat& a, const CMat& b) {
    const Eigen::MatrixXcd m = to_eigen(b).inverse() * to_eigen(a);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
    double best = -std::numeric_limits<double>::infinity();
    for (long i = 0; i < es.eigenvalues().size(); ++i)
        best = std::max(best, es.eigenvalues()(i).real());
    return best;
}

/// Dense SVD oracle: dominant left singular vector.
inline CVec dense_left_singular(const CMat& a) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a), Eigen::ComputeThinU);
    return from_eigen(svd.matrixU().col(0));
}

// ---- random generators (all seeded, all deterministic) ----------------

inline CVec random_cvec(SplitMix64& rng, std::size_t n, double scale = 1.0) {
    CVec v(n);
    for (auto& z : v) z = scale * rng.next_cgauss();
    return v;
}

inline CMat random_cmat(SplitMix64& rng, std::size_t rows, std::size_t cols,
                        double scale = 1.0) {
    CMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = scale * rng.next_cgauss();
    return m;
}

inline CMat random_hermitian(SplitMix64& rng, std::size_t n) {
    CMat a = random_cmat(rng, n, n);
    CMat h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

/// Hermitian positive definite: B B^H + eps I.
inline CMat random_hpd(SplitMix64& rng, std::size_t n, double eps = 0.1) {
    CMat b = random_cmat(rng, n, n);
    CMat a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx s{};
            for (std::size_t k = 0; k < n; ++k) s += b(i, k) * std::conj(b(j, k));
            a(i, j) = s;
        }
        a(i, i) += eps;
    }
    return a;
}

inline CVec random_unit_modulus(SplitMix64& rng, std::size_t n) {
    CVec v(n);
    for (auto& z : v)
        z = std::polar(1.0, (2.0 * rng.next_unit() - 1.0) * std::numbers::pi);
    return v;
}

inline model::PhaseVector random_phases(SplitMix64& rng, int m) {
    std::vector<double> theta(static_cast<std::size_t>(m));
    for (double& t : theta) t = (2.0 * rng.next_unit() - 1.0) * std::numbers::pi;
    return model::PhaseVector(std::move(theta));
}

inline model::Beamformer random_full_power(SplitMix64& rng, std::size_t n, double p) {
    CVec f = random_cvec(rng, n);
    linalg::scale(f, std::sqrt(p) / linalg::norm(f));
    return model::Beamformer::from_vector(std::move(f));
}

/// Unit-scale instance: channels O(1), unit noise, unit power. Keeps the
/// algebraic property tests well conditioned.
inline channel::SystemInstance unit_instance(SplitMix64& rng, int m, int n_t,
                                             bool with_direct = false) {
    channel::SystemInstance inst;
    inst.g = random_cmat(rng, static_cast<std::size_t>(m), static_cast<std::size_t>(n_t));
    inst.h_l = random_cvec(rng, static_cast<std::size_t>(m));
    inst.h_e = random_cvec(rng, static_cast<std::size_t>(m));
    inst.sigma2_l = 1.0;
    inst.sigma2_e = 1.0;
    inst.p = 1.0;
    if (with_direct) {
        inst.direct_h_l = random_cvec(rng, static_cast<std::size_t>(n_t));
        inst.direct_h_e = random_cvec(rng, static_cast<std::size_t>(n_t));
    }
    return inst;
}

/// Physical-scale instance drawn through the channel module.
inline channel::SystemInstance physical_instance(std::uint64_t seed, int m, int n_t,
                                                 bool with_direct = false) {
    channel::ScenarioConfig cfg;
    cfg.n_t = n_t;
    cfg.m = m;
    cfg.p_dbm = 5.0;
    cfg.alpha = 4.0;
    cfg.r_tr = 40.0;
    cfg.r_rl = 25.0;
    cfg.r_re = 20.0;
    if (with_direct) {
        cfg.r_tl = 60.0;
        cfg.r_te = 35.0;
    }
    cfg.seed = seed;
    SplitMix64 rng(seed);
    return channel::build_instance(cfg, rng);
}

/// |<a, b>| should be ~1 for unit vectors equal up to a global phase.
inline double alignment(const CVec& a, const CVec& b) {
    return std::abs(linalg::inner(a, b)) / (linalg::norm(a) * linalg::norm(b));
}

} // namespace irsec::testing

#endif
