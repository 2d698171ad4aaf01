// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted MISO wiretap channels
// Copyright (C) 2026 the irsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace irsec::linalg {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr int kMaxJacobiSweeps = 100;

double max_abs_entry(const CMat& a) {
    double m = 0.0;
    for (const cplx& z : a.data()) m = std::max(m, std::abs(z));
    return m;
}

void require_square(const CMat& a, const char* who) {
    if (a.rows() == 0 || a.rows() != a.cols())
        throw InvalidArgument(std::string(who) + ": matrix must be square and nonempty");
    if (!a.all_finite())
        throw InvalidArgument(std::string(who) + ": matrix has non-finite entries");
}

/// Symmetrize as (A + A^H)/2 after checking A is Hermitian to within
/// 1e-10 relative; the averaging absorbs floating-point construction error.
CMat symmetrized(const CMat& a, const char* who) {
    const std::size_t n = a.rows();
    const double tol = kHermitianTol * std::max(1.0, max_abs_entry(a));
    CMat h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol)
                throw InvalidArgument(std::string(who) + ": matrix is not Hermitian");
            h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
        }
    }
    return h;
}

double off_diagonal_norm(const CMat& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace

CMat CMat::identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::adjoint() const {
    CMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

bool CMat::all_finite() const {
    for (const cplx& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

double CMat::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

CMat operator*(const CMat& a, const CMat& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matrix product: dimension mismatch");
    CMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

CVec operator*(const CMat& a, const CVec& x) {
    if (a.cols() != x.size()) throw InvalidArgument("matrix-vector product: dimension mismatch");
    CVec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s{};
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

cplx inner(const CVec& a, const CVec& x) {
    if (a.size() != x.size()) throw InvalidArgument("inner product: dimension mismatch");
    cplx s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * x[i];
    return s;
}

double norm2(const CVec& x) {
    double s = 0.0;
    for (const cplx& z : x) s += std::norm(z);
    return s;
}

double norm(const CVec& x) { return std::sqrt(norm2(x)); }

void scale(CVec& x, cplx s) {
    for (cplx& z : x) z *= s;
}

CVec adjoint_times(const CMat& a, const CVec& x) {
    if (a.rows() != x.size()) throw InvalidArgument("adjoint product: dimension mismatch");
    CVec y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const cplx xi = x[i];
        for (std::size_t j = 0; j < a.cols(); ++j) y[j] += std::conj(a(i, j)) * xi;
    }
    return y;
}

void canonicalize_phase(CVec& v) {
    std::size_t imax = 0;
    double amax = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > amax) {
            amax = a;
            imax = i;
        }
    }
    if (amax == 0.0) return;
    const cplx rot = std::conj(v[imax]) / amax;
    for (cplx& z : v) z *= rot;
    v[imax] = cplx(std::abs(v[imax]), 0.0); // clear roundoff on the pivot
}

HermitianEigensystem hermitian_eigensystem(const CMat& a_in) {
    require_square(a_in, "hermitian_eigensystem");
    CMat a = symmetrized(a_in, "hermitian_eigensystem");
    const std::size_t n = a.rows();
    CMat v = CMat::identity(n);

    const double norm_a = a.frobenius_norm();
    const double stop = 1e-14 * std::max(norm_a, std::numeric_limits<double>::min());

    if (norm_a > 0.0) {
        int sweep = 0;
        for (; sweep < kMaxJacobiSweeps; ++sweep) {
            if (off_diagonal_norm(a) <= stop) break;
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const cplx apq = a(p, q);
                    const double r = std::abs(apq);
                    if (r <= 1e-300) continue;
                    const double phi = std::arg(apq);
                    const double app = a(p, p).real();
                    const double aqq = a(q, q).real();
                    const double tau = (aqq - app) / (2.0 * r);
                    const double sgn = tau >= 0.0 ? 1.0 : -1.0;
                    const double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const cplx em = std::polar(1.0, -phi);
                    const cplx ep = std::polar(1.0, phi);
                    // columns: A <- A G with G = [[c, s], [-s e^{-j phi}, c e^{-j phi}]]
                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx aip = a(i, p), aiq = a(i, q);
                        a(i, p) = c * aip - s * em * aiq;
                        a(i, q) = s * aip + c * em * aiq;
                        const cplx vip = v(i, p), viq = v(i, q);
                        v(i, p) = c * vip - s * em * viq;
                        v(i, q) = s * vip + c * em * viq;
                    }
                    // rows: A <- G^H A
                    for (std::size_t j = 0; j < n; ++j) {
                        const cplx apj = a(p, j), aqj = a(q, j);
                        a(p, j) = c * apj - s * ep * aqj;
                        a(q, j) = s * apj + c * ep * aqj;
                    }
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    a(p, p) = cplx(a(p, p).real(), 0.0);
                    a(q, q) = cplx(a(q, q).real(), 0.0);
                }
            }
        }
        if (sweep == kMaxJacobiSweeps) {
            const double resid = off_diagonal_norm(a);
            if (resid > 1e-10 * norm_a)
                throw NumericalError("hermitian_eigensystem: Jacobi sweeps did not converge",
                                     resid);
        }
    }

    HermitianEigensystem out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i).real();
    out.vectors = std::move(v);
    return out;
}

EigenPair dominant_eigpair(const CMat& a) {
    require_square(a, "dominant_eigpair");
    const CMat h = symmetrized(a, "dominant_eigpair");
    HermitianEigensystem es = hermitian_eigensystem(h);

    std::size_t imax = 0;
    for (std::size_t i = 1; i < es.values.size(); ++i)
        if (es.values[i] > es.values[imax]) imax = i;

    EigenPair pair;
    pair.value = es.values[imax];
    pair.vector.resize(h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) pair.vector[i] = es.vectors(i, imax);
    const double nv = norm(pair.vector);
    scale(pair.vector, 1.0 / nv);
    canonicalize_phase(pair.vector);

    CVec hv = h * pair.vector;
    for (std::size_t i = 0; i < hv.size(); ++i) hv[i] -= pair.value * pair.vector[i];
    const double resid = norm(hv);
    if (resid > 1e-9 * std::max(h.frobenius_norm(), 1e-300))
        throw NumericalError("dominant_eigpair: residual above contract", resid);
    return pair;
}

CMat cholesky(const CMat& a) {
    require_square(a, "cholesky");
    const std::size_t n = a.rows();
    CMat l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j).real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
        if (!(d > 0.0))
            throw NumericalError("cholesky: matrix is not positive definite", d);
        l(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            l(i, j) = s / l(j, j).real();
        }
    }
    return l;
}

CVec forward_solve(const CMat& l, const CVec& b) {
    const std::size_t n = l.rows();
    CVec y(n);
    for (std::size_t i = 0; i < n; ++i) {
        cplx s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
        y[i] = s / l(i, i).real();
    }
    return y;
}

CVec backward_solve_adjoint(const CMat& l, const CVec& b) {
    const std::size_t n = l.rows();
    CVec x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        cplx s = b[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= std::conj(l(k, ii)) * x[k];
        x[ii] = s / l(ii, ii).real();
    }
    return x;
}

EigenPair generalized_dominant_eigpair(const CMat& a, const CMat& b) {
    require_square(a, "generalized_dominant_eigpair");
    require_square(b, "generalized_dominant_eigpair");
    if (a.rows() != b.rows())
        throw InvalidArgument("generalized_dominant_eigpair: dimension mismatch");

    const CMat ah = symmetrized(a, "generalized_dominant_eigpair");
    const CMat bh = symmetrized(b, "generalized_dominant_eigpair");

    // Condition estimate from the full spectrum of B; the matrices here are
    // tiny so this costs less than getting a cheaper estimate wrong.
    HermitianEigensystem eb = hermitian_eigensystem(bh);
    const auto [bmin_it, bmax_it] = std::minmax_element(eb.values.begin(), eb.values.end());
    const double bmin = *bmin_it, bmax = *bmax_it;
    if (!(bmin > 0.0) || bmax / bmin > 1e12)
        throw NumericalError("generalized_dominant_eigpair: B numerically singular",
                             bmin > 0.0 ? bmax / bmin : bmin);

    const std::size_t n = ah.rows();
    const CMat l = cholesky(bh);

    // C = L^{-1} A L^{-H}, built column-by-column through triangular solves.
    CMat w(n, n); // W = L^{-1} A
    for (std::size_t j = 0; j < n; ++j) {
        CVec col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = ah(i, j);
        CVec sol = forward_solve(l, col);
        for (std::size_t i = 0; i < n; ++i) w(i, j) = sol[i];
    }
    CMat c(n, n); // C = W L^{-H} = (L^{-1} W^H)^H
    const CMat wh = w.adjoint();
    for (std::size_t j = 0; j < n; ++j) {
        CVec col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = wh(i, j);
        CVec sol = forward_solve(l, col);
        for (std::size_t i = 0; i < n; ++i) c(j, i) = std::conj(sol[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const cplx m = 0.5 * (c(i, j) + std::conj(c(j, i)));
            c(i, j) = m;
            c(j, i) = std::conj(m);
        }

    HermitianEigensystem ec = hermitian_eigensystem(c);
    std::size_t imax = 0;
    for (std::size_t i = 1; i < ec.values.size(); ++i)
        if (ec.values[i] > ec.values[imax]) imax = i;

    CVec y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = ec.vectors(i, imax);
    CVec x = backward_solve_adjoint(l, y);
    scale(x, 1.0 / norm(x));
    canonicalize_phase(x);

    return EigenPair{ec.values[imax], std::move(x)};
}

CVec dominant_left_singular(const CMat& a) {
    if (a.rows() == 0 || a.cols() == 0)
        throw InvalidArgument("dominant_left_singular: empty matrix");
    if (!a.all_finite())
        throw InvalidArgument("dominant_left_singular: non-finite entries");
    if (a.frobenius_norm() == 0.0)
        throw InvalidArgument("dominant_left_singular: zero matrix");

    const std::size_t m = a.rows();
    CMat w(m, m); // A A^H
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            cplx s{};
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * std::conj(a(j, k));
            w(i, j) = s;
            w(j, i) = std::conj(s);
        }
    }
    return dominant_eigpair(w).vector;
}

} // namespace irsec::linalg
