// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IRSEC_MODEL_HPP
#define IRSEC_MODEL_HPP

#include <vector>

#include "channel.hpp"
#include "linalg.hpp"

namespace irsec::model {

using channel::SystemInstance;

enum class Receiver { legit, eaves };

/// Wrap an angle into (-pi, pi].
double wrap_angle(double theta);

/// The M reflection phases. Storage is the real angle vector theta, kept in
/// (-pi, pi]; the reflection matrix diagonal is e^{+j theta_k} and the
/// stacked unit-modulus vector uses the conjugate convention v_k =
/// e^{-j theta_k}, so that h_i^H Phi G == v^H R_i with R_i = diag(h_i^H) G.
class PhaseVector {
public:
    explicit PhaseVector(std::vector<double> theta);
    static PhaseVector zeros(int m);
    static PhaseVector from_v(const linalg::CVec& v); // theta_k = -arg(v_k)

    int size() const { return static_cast<int>(theta_.size()); }
    const std::vector<double>& theta() const { return theta_; }
    double theta(int k) const { return theta_[static_cast<std::size_t>(k)]; }
    void set(int k, double theta_k);

    linalg::CVec v() const;        // v_k = e^{-j theta_k}
    linalg::CVec phi_diag() const; // e^{+j theta_k}

private:
    std::vector<double> theta_;
};

/// Transmit weight vector; power caches ||f||^2.
struct Beamformer {
    linalg::CVec f;
    double power = 0.0;

    static Beamformer from_vector(linalg::CVec f);
};

/// The Hermitian forms that express the objective as a ratio of quadratics
/// in v: Y_i = (1/M) I + (1/sigma_i^2) (R_i f)(R_i f)^H. The rank-one
/// factors u_i = R_i f are kept so the solvers can apply Y_i in O(M); the
/// full matrices are materialized on demand. lambda_max_ye is exact from
/// the rank-one-plus-scaled-identity structure.
struct QuadraticForms {
    int m = 0;
    linalg::CMat r_l, r_e; ///< R_i = diag(h_i^H) G, M x N_t
    linalg::CVec u_l, u_e; ///< R_i f
    double sigma2_l = 0.0, sigma2_e = 0.0;
    double lambda_max_ye = 0.0; ///< 1/M + ||u_e||^2 / sigma2_e

    linalg::CVec apply_yl(const linalg::CVec& v) const;
    linalg::CVec apply_ye(const linalg::CVec& v) const;
    linalg::CMat y_l() const;
    linalg::CMat y_e() const;
};

/// R_i = diag(h_i^H) G.
linalg::CMat reflect_matrix(const SystemInstance& inst, Receiver which);

/// Effective channel (h_i^H Phi G)^H as a length-N_t column vector.
linalg::CVec effective_channel(const SystemInstance& inst, const PhaseVector& phases,
                               Receiver which);

/// Secrecy rate in bits/s/Hz; clamped at zero.
double secrecy_rate(const SystemInstance& inst, const Beamformer& f,
                    const PhaseVector& phases);

/// The raw rate ratio (1 + SNR_l) / (1 + SNR_e); no clamp, no log.
double objective_ratio(const SystemInstance& inst, const Beamformer& f,
                       const PhaseVector& phases);

/// X_i = I + (P / sigma_i^2) a_i a_i^H with a_i the effective channel.
linalg::CMat build_x(const SystemInstance& inst, const PhaseVector& phases,
                     Receiver which);

QuadraticForms build_quadratic_forms(const SystemInstance& inst, const linalg::CVec& f);
/// Same, reusing precomputed reflect matrices (solver hot path).
QuadraticForms build_quadratic_forms(const linalg::CMat& r_l, const linalg::CMat& r_e,
                                     double sigma2_l, double sigma2_e,
                                     const linalg::CVec& f);

/// v^H Y_l v / v^H Y_e v.
double quadratic_ratio(const QuadraticForms& forms, const linalg::CVec& v);

/// Full-power beamformer maximizing (1 + |c_l^H f|^2/s_l) / (1 + |c_e^H f|^2/s_e)
/// over ||f||^2 <= P, for an arbitrary channel pair. Exact: the maximizer is
/// found in span{c_l, c_e} through a reduced 2x2 generalized eigenproblem
/// (or orthogonal to c_e when staying neutral is optimal). Returns the
/// beamformer and the achieved ratio.
struct BeamformerSolution {
    Beamformer f;
    double ratio = 0.0; ///< generalized eigenvalue = achieved rate ratio
};
BeamformerSolution optimal_beamformer_for_channels(const linalg::CVec& c_l,
                                                   const linalg::CVec& c_e,
                                                   double sigma2_l, double sigma2_e,
                                                   double p);

/// Optimal transmit beamformer for fixed phases.
Beamformer optimal_beamformer(const SystemInstance& inst, const PhaseVector& phases);

/// Phase initialization from the dominant left singular vector u of R_l:
/// angle(v) = angle(u). Falls back to all-zero phases (with a note on
/// stderr) when R_l is identically zero.
PhaseVector initial_phases(const SystemInstance& inst);

} // namespace irsec::model

#endif
