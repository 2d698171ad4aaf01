// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef IRSEC_LINALG_HPP
#define IRSEC_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace irsec::linalg {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Dense complex matrix, row-major. Sized for this project: everything the
/// solvers touch is a few hundred rows at most, so storage is a flat vector
/// and algorithms favor clarity over blocking.
class CMat {
public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMat identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    const std::vector<cplx>& data() const noexcept { return a_; }
    std::vector<cplx>& data() noexcept { return a_; }

    CMat adjoint() const;
    bool all_finite() const;
    double frobenius_norm() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

CMat operator*(const CMat& a, const CMat& b);
CVec operator*(const CMat& a, const CVec& x);

/// a^H x (conjugate-linear in the first argument).
cplx inner(const CVec& a, const CVec& x);
double norm2(const CVec& x);      // squared Euclidean norm
double norm(const CVec& x);
void scale(CVec& x, cplx s);
CVec adjoint_times(const CMat& a, const CVec& x); // A^H x

/// Largest eigenvalue with an associated unit eigenvector. The vector's
/// global phase is canonical: the largest-magnitude entry is real and
/// nonnegative, so repeated runs and golden files compare bit-for-bit.
struct EigenPair {
    double value = 0.0;
    CVec vector;
};

/// All eigenvalues/eigenvectors of a Hermitian matrix (values unsorted,
/// vectors[.] are the matching columns).
struct HermitianEigensystem {
    std::vector<double> values;
    CMat vectors;
};

/// Rotate the global phase so the largest-magnitude entry is real >= 0.
/// Ties pick the lowest index. No-op on the zero vector.
void canonicalize_phase(CVec& v);

/// Full eigensystem of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Input is symmetrized as (A + A^H)/2 before processing; a
/// Hermitian-check against tolerance 1e-10 (relative to the largest entry)
/// rejects genuinely non-Hermitian input. Unconditionally convergent on
/// these sizes; throws NumericalError with the residual off-diagonal norm
/// if the sweep cap is ever hit.
HermitianEigensystem hermitian_eigensystem(const CMat& a);

/// Largest eigenvalue + unit eigenvector of a Hermitian matrix.
/// Residual contract: ||A v - lambda v|| <= 1e-9 ||A||_F.
EigenPair dominant_eigpair(const CMat& a);

/// Maximizer of the generalized Rayleigh quotient (x^H A x)/(x^H B x) for
/// Hermitian A and Hermitian positive-definite B, via Cholesky reduction
/// to a standard Hermitian problem. B with condition estimate above 1e12
/// (or a nonpositive eigenvalue) is rejected as numerically singular.
EigenPair generalized_dominant_eigpair(const CMat& a, const CMat& b);

/// Unit vector u maximizing ||A^H u||, i.e. the dominant eigenvector of
/// A A^H. Phase-canonicalized like every vector returned from this module.
CVec dominant_left_singular(const CMat& a);

/// Cholesky factor L (lower) of a Hermitian positive-definite matrix.
CMat cholesky(const CMat& a);
CVec forward_solve(const CMat& l, const CVec& b);       // L y = b
CVec backward_solve_adjoint(const CMat& l, const CVec& b); // L^H x = b

} // namespace irsec::linalg

#endif
