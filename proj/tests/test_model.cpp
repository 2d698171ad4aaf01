// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include "errors.hpp"
#include "helpers.hpp"
#include "model.hpp"

using namespace irsec;
using namespace irsec::linalg;
using namespace irsec::model;
using namespace irsec::testing;

namespace {

SystemInstance scalar_instance(cplx h_l, cplx h_e, double sigma2 = 1.0, double p = 1.0) {
    SystemInstance inst;
    inst.g = CMat(1, 1);
    inst.g(0, 0) = 1.0;
    inst.h_l = {h_l};
    inst.h_e = {h_e};
    inst.sigma2_l = sigma2;
    inst.sigma2_e = sigma2;
    inst.p = p;
    return inst;
}

Beamformer unit_beamformer() { return Beamformer::from_vector({cplx(1.0, 0.0)}); }

} // namespace

TEST_CASE("PhaseVector: wrapping, conventions, round trip") {
    PhaseVector ph({7.0, -7.0, std::numbers::pi, -std::numbers::pi});
    for (double t : ph.theta()) {
        CHECK(t > -std::numbers::pi);
        CHECK(t <= std::numbers::pi);
    }
    // v_k = e^{-j theta_k}; Phi diagonal is the conjugate
    const CVec v = ph.v();
    const CVec phi = ph.phi_diag();
    for (std::size_t k = 0; k < v.size(); ++k) {
        CHECK(std::abs(std::abs(v[k]) - 1.0) <= 1e-12);
        CHECK(std::abs(v[k] - std::conj(phi[k])) <= 1e-12);
    }
    const PhaseVector back = PhaseVector::from_v(v);
    for (int k = 0; k < ph.size(); ++k)
        CHECK(back.theta(k) == doctest::Approx(ph.theta(k)).epsilon(1e-12));
}

TEST_CASE("effective_channel: single-element reduction") {
    SystemInstance inst = scalar_instance(cplx(2.0, 1.0), cplx(0.5, -0.3));
    inst.g(0, 0) = cplx(0.7, 0.2);
    PhaseVector ph({0.4});
    const CVec c = effective_channel(inst, ph, Receiver::legit);
    const cplx expect = std::conj(inst.g(0, 0)) * std::polar(1.0, -0.4) * inst.h_l[0];
    CHECK(std::abs(c[0] - expect) <= 1e-14);
}

TEST_CASE("effective_channel: direct product equals reflect-matrix form") {
    SplitMix64 rng(21);
    for (int rep = 0; rep < 20; ++rep) {
        const SystemInstance inst = unit_instance(rng, 6, 4);
        const PhaseVector ph = random_phases(rng, 6);
        for (Receiver which : {Receiver::legit, Receiver::eaves}) {
            const CVec direct = effective_channel(inst, ph, which);
            // (v^H R)^H = R^H v
            const CMat r = reflect_matrix(inst, which);
            const CVec alt = adjoint_times(r, ph.v());
            REQUIRE(direct.size() == alt.size());
            for (std::size_t i = 0; i < direct.size(); ++i)
                CHECK(std::abs(direct[i] - alt[i]) <= 1e-12 * (1.0 + std::abs(alt[i])));
        }
    }
}

TEST_CASE("effective_channel: dimension mismatch rejected") {
    SplitMix64 rng(20);
    const SystemInstance inst = unit_instance(rng, 4, 3);
    CHECK_THROWS_AS(effective_channel(inst, PhaseVector::zeros(5), Receiver::legit),
                    InvalidArgument);
}

TEST_CASE("effective_channel: zero channel gives zero vector") {
    SplitMix64 rng(22);
    SystemInstance inst = unit_instance(rng, 4, 3);
    inst.h_l.assign(4, cplx{});
    const CVec c = effective_channel(inst, random_phases(rng, 4), Receiver::legit);
    for (const auto& z : c) CHECK(z == cplx{});
}

TEST_CASE("secrecy_rate: scalar arithmetic cases") {
    // h_e = 0: log2(1 + |2|^2) = log2(5)
    SystemInstance inst = scalar_instance(2.0, 0.0);
    const PhaseVector ph = PhaseVector::zeros(1);
    CHECK(secrecy_rate(inst, unit_beamformer(), ph) ==
          doctest::Approx(std::log2(5.0)).epsilon(1e-12));

    // identical channels and noises: zero for any beamformer and phases
    SystemInstance tie = scalar_instance(cplx(1.0, 2.0), cplx(1.0, 2.0));
    CHECK(secrecy_rate(tie, unit_beamformer(), ph) == 0.0);

    // h_l = 2, h_e = 1: (1 + 4) / (1 + 1)
    SystemInstance both = scalar_instance(2.0, 1.0);
    CHECK(secrecy_rate(both, unit_beamformer(), ph) ==
          doctest::Approx(std::log2(5.0 / 2.0)).epsilon(1e-12));
}

TEST_CASE("secrecy_rate: never negative") {
    SplitMix64 rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        const SystemInstance inst = unit_instance(rng, 4, 3);
        const PhaseVector ph = random_phases(rng, 4);
        const Beamformer f = random_full_power(rng, 3, inst.p);
        CHECK(secrecy_rate(inst, f, ph) >= 0.0);
    }
}

TEST_CASE("objective_ratio: degenerate bounds") {
    SplitMix64 rng(24);
    SystemInstance inst = unit_instance(rng, 5, 3);
    const PhaseVector ph = random_phases(rng, 5);
    const Beamformer f = random_full_power(rng, 3, inst.p);

    SystemInstance no_eaves = inst;
    no_eaves.h_e.assign(5, cplx{});
    CHECK(objective_ratio(no_eaves, f, ph) >= 1.0);

    SystemInstance no_legit = inst;
    no_legit.h_l.assign(5, cplx{});
    CHECK(objective_ratio(no_legit, f, ph) <= 1.0);
}

TEST_CASE("objective_ratio: P1 form equals quadratic form at full power") {
    SplitMix64 rng(25);
    for (int rep = 0; rep < 100; ++rep) {
        const SystemInstance inst = unit_instance(rng, 5, 4);
        const PhaseVector ph = random_phases(rng, 5);
        const Beamformer f = random_full_power(rng, 4, inst.p);
        const double direct = objective_ratio(inst, f, ph);
        const QuadraticForms forms = build_quadratic_forms(inst, f.f);
        const double quad = quadratic_ratio(forms, ph.v());
        CHECK(std::abs(direct - quad) <= 1e-10 * direct);
    }
}

TEST_CASE("objective_ratio: invariant under global phase of f and v") {
    SplitMix64 rng(26);
    const SystemInstance inst = unit_instance(rng, 5, 4);
    const PhaseVector ph = random_phases(rng, 5);
    const Beamformer f = random_full_power(rng, 4, inst.p);
    const double base = objective_ratio(inst, f, ph);

    Beamformer rotated = f;
    scale(rotated.f, std::polar(1.0, 1.234));
    CHECK(std::abs(objective_ratio(inst, rotated, ph) - base) <= 1e-12 * base);

    // global phase on v: shift every theta by the same delta
    std::vector<double> shifted = ph.theta();
    for (double& t : shifted) t += 0.777;
    CHECK(std::abs(objective_ratio(inst, f, PhaseVector(shifted)) - base) <= 1e-12 * base);
}

TEST_CASE("build_x: zero channel gives identity") {
    SplitMix64 rng(27);
    SystemInstance inst = unit_instance(rng, 4, 3);
    inst.h_e.assign(4, cplx{});
    const CMat x = build_x(inst, random_phases(rng, 4), Receiver::eaves);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::abs(x(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-14);
}

TEST_CASE("build_x: trace and spectrum of the rank-one update") {
    SplitMix64 rng(28);
    const SystemInstance inst = unit_instance(rng, 5, 4);
    const PhaseVector ph = random_phases(rng, 5);
    for (Receiver which : {Receiver::legit, Receiver::eaves}) {
        const CMat x = build_x(inst, ph, which);
        const CVec a = effective_channel(inst, ph, which);
        const double sigma2 = which == Receiver::legit ? inst.sigma2_l : inst.sigma2_e;
        const double bump = inst.p / sigma2 * norm2(a);

        cplx tr{};
        for (std::size_t i = 0; i < 4; ++i) tr += x(i, i);
        CHECK(std::abs(tr - cplx(4.0 + bump, 0.0)) <= 1e-10 * (4.0 + bump));

        // spectrum: N_t - 1 ones plus 1 + bump (dense oracle)
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(x));
        for (long i = 0; i < 3; ++i)
            CHECK(es.eigenvalues()(i) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(es.eigenvalues()(3) == doctest::Approx(1.0 + bump).epsilon(1e-10));
    }
}

TEST_CASE("build_quadratic_forms: zero beamformer leaves (1/M) I") {
    SplitMix64 rng(29);
    const SystemInstance inst = unit_instance(rng, 6, 3);
    const QuadraticForms forms = build_quadratic_forms(inst, CVec(3));
    const CMat yl = forms.y_l();
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(std::abs(yl(i, j) - (i == j ? cplx(1.0 / 6.0) : cplx{})) <= 1e-15);
    CHECK(forms.lambda_max_ye == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("build_quadratic_forms: lambda_max closed form matches eigensolver") {
    SplitMix64 rng(30);
    for (int rep = 0; rep < 10; ++rep) {
        const SystemInstance inst = unit_instance(rng, 5, 3);
        const Beamformer f = random_full_power(rng, 3, inst.p);
        const QuadraticForms forms = build_quadratic_forms(inst, f.f);
        CHECK(forms.lambda_max_ye ==
              doctest::Approx(dominant_eigpair(forms.y_e()).value).epsilon(1e-10));
        CHECK(forms.lambda_max_ye ==
              doctest::Approx(1.0 / 5.0 + norm2(forms.u_e) / inst.sigma2_e).epsilon(1e-14));
    }
}

TEST_CASE("optimal_beamformer: maximum-ratio direction when the eavesdropper vanishes") {
    SplitMix64 rng(31);
    SystemInstance inst = unit_instance(rng, 5, 4);
    inst.h_e.assign(5, cplx{});
    const PhaseVector ph = random_phases(rng, 5);
    const Beamformer f = optimal_beamformer(inst, ph);
    const CVec a_l = effective_channel(inst, ph, Receiver::legit);
    CHECK(f.power == doctest::Approx(inst.p).epsilon(1e-10));
    CHECK(alignment(f.f, a_l) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("optimal_beamformer: tie when both receivers see the same channel") {
    SplitMix64 rng(32);
    SystemInstance inst = unit_instance(rng, 5, 4);
    inst.h_e = inst.h_l;
    const PhaseVector ph = random_phases(rng, 5);
    const Beamformer f = optimal_beamformer(inst, ph);
    CHECK(objective_ratio(inst, f, ph) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("optimal_beamformer: dominates random search and matches dense oracle") {
    SplitMix64 rng(33);
    for (int rep = 0; rep < 10; ++rep) {
        const bool physical = rep % 2 == 0;
        const SystemInstance inst =
            physical ? physical_instance(1000 + static_cast<std::uint64_t>(rep), 5, 4)
                     : unit_instance(rng, 5, 4);
        const PhaseVector ph = random_phases(rng, 5);
        const Beamformer f = optimal_beamformer(inst, ph);
        const double star = objective_ratio(inst, f, ph);
        CHECK(f.power == doctest::Approx(inst.p).epsilon(1e-10));

        for (int s = 0; s < 10000; ++s) {
            const Beamformer trial = random_full_power(rng, 4, inst.p);
            CHECK(star >= objective_ratio(inst, trial, ph) - 1e-9 * star);
        }

        const CMat xl = build_x(inst, ph, Receiver::legit);
        const CMat xe = build_x(inst, ph, Receiver::eaves);
        const double dense = dense_binv_a_max(xl, xe);
        CHECK(star == doctest::Approx(dense).epsilon(1e-8));

        // in-library generalized eigensolver agrees too
        const EigenPair gen = generalized_dominant_eigpair(xl, xe);
        CHECK(star == doctest::Approx(gen.value).epsilon(1e-8));
    }
}

TEST_CASE("initial_phases: single element reduces to a zero angle") {
    SystemInstance inst = scalar_instance(cplx(0.3, -1.2), cplx(0.1, 0.0));
    const PhaseVector ph = initial_phases(inst);
    // the canonicalized scalar singular vector is 1, so theta = 0
    CHECK(ph.theta(0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("initial_phases: rank-one reflect matrix aligns with its column factor") {
    SplitMix64 rng(34);
    const std::size_t m = 6, n = 4;
    const CVec a = random_cvec(rng, m);
    const CVec b = random_cvec(rng, n);
    // choose G so that diag(h_l^H) G = a b^H
    SystemInstance inst;
    inst.h_l = random_cvec(rng, m);
    inst.h_e = random_cvec(rng, m);
    inst.g = CMat(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inst.g(i, j) = a[i] * std::conj(b[j]) / std::conj(inst.h_l[i]);
    inst.sigma2_l = inst.sigma2_e = 1.0;
    inst.p = 1.0;

    const PhaseVector ph = initial_phases(inst);
    const CVec v = ph.v();
    // angle(v) = angle(a) up to one global phase
    const cplx ref = v[0] * std::conj(a[0] / std::abs(a[0]));
    for (std::size_t k = 0; k < m; ++k) {
        const cplx rel = v[k] * std::conj(a[k] / std::abs(a[k]));
        CHECK(std::abs(rel - ref) <= 1e-9);
    }
}

TEST_CASE("initial_phases: matches the dense SVD oracle") {
    SplitMix64 rng(35);
    for (int rep = 0; rep < 10; ++rep) {
        const SystemInstance inst = unit_instance(rng, 6, 4);
        const PhaseVector ph = initial_phases(inst);
        CVec u = dense_left_singular(reflect_matrix(inst, Receiver::legit));
        canonicalize_phase(u);
        const CVec v = ph.v();
        for (std::size_t k = 0; k < u.size(); ++k) {
            if (std::abs(u[k]) < 1e-9) continue;
            const double du = std::arg(u[k]);
            const double dv = std::arg(v[k]);
            CHECK(std::abs(wrap_angle(du - dv)) <= 1e-8);
        }
    }
}

TEST_CASE("initial_phases: zero reflect matrix falls back to zero phases") {
    SplitMix64 rng(36);
    SystemInstance inst = unit_instance(rng, 4, 3);
    inst.h_l.assign(4, cplx{});
    const PhaseVector ph = initial_phases(inst);
    for (double t : ph.theta()) CHECK(t == 0.0);
}
