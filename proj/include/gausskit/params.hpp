// Copyright 2026 The gausskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef _GAUSSKIT_PARAMS_H
#define _GAUSSKIT_PARAMS_H

#include "gausskit/core.hpp"

namespace gausskit {

/// Parameters (c, mu, A, Lambda) of a self-adjoint positive element with generating function
/// G(u, v) = c exp(u^T mu + conj(mu)^T v + u^T A u + u^T Lambda v + v^T conj(A) v).
struct E2Params {
    double c = 1;
    CVec mu;
    CMat a;
    CMat lambda;

    size_t n() const {
        return (size_t)mu.size();
    }

    /// Vacuum state on n modes.
    static E2Params vacuum(size_t n);

    /// Normalized state from (A, Lambda) and an optional linear coefficient; c is derived.
    static E2Params state(const CMat &a, const CMat &lambda, const CVec &mu = CVec());

    /// Enforces A = A^T and Lambda = Lambda^dagger by symmetrization; throws ShapeError on mismatch.
    void canonicalize();
};

/// The general 6-tuple (c, alpha, beta, A, Lambda, B) with
/// G(u, v) = c exp(u^T alpha + beta^T v + u^T A u + u^T Lambda v + v^T B v).
struct GeneralE2Params {
    cplx c = 1;
    CVec alpha;
    CVec beta;
    CMat a;
    CMat lambda;
    CMat b;

    size_t n() const {
        return (size_t)alpha.size();
    }

    static GeneralE2Params identity(size_t n);
    static GeneralE2Params from_e2(const E2Params &p);

    bool is_self_adjoint(double tol = 1e-12) const;

    /// Collapses a self-adjoint tuple to (c, alpha, A, Lambda). Throws DomainError otherwise.
    E2Params to_e2(double tol = 1e-9) const;
};

/// Mean annihilation vector and real 2n x 2n covariance matrix in the (x, y) splitting.
struct CovarianceParams {
    CVec m;
    RMat s;

    size_t n() const {
        return (size_t)m.size();
    }
};

/// Vacuum, one- and two-particle matrix elements of an operator Z.
struct AmplitudeData {
    cplx vac = 1;
    CVec lam_z;     // <chi_j|Z|Omega>
    CVec mu_z;      // <Omega|Z|chi_j>
    CMat a_z;       // entries of the two-particle annihilation amplitudes
    CMat b_z;       // entries of the two-particle creation amplitudes
    CMat lambda_z;  // <chi_j|Z|chi_k>

    size_t n() const {
        return (size_t)lam_z.size();
    }
};

E2Params cov_to_e2(const CovarianceParams &cov, double tol = kDefaultTol);
CovarianceParams e2_to_cov(const E2Params &p, double tol = kDefaultTol);

/// Minimal hermitian eigenvalue of S + (i/2) J.
double uncertainty_margin(const RMat &s);

bool is_valid_state(const CMat &a, const CMat &lambda, double tol = kDefaultTol);
double trace_of_positive(const E2Params &p, double tol = kDefaultTol);
double normalization_c(const CVec &mu, const CMat &a, const CMat &lambda, double tol = kDefaultTol);
bool is_pure(const E2Params &p, double tol = kDefaultTol);

/// Mean annihilation vector m, solving M(A, Lambda)(Re m, Im m) = (Re mu, Im mu).
CVec mean_of_state(const E2Params &p, double tol = kDefaultTol);

GeneralE2Params e2_from_amplitudes(const AmplitudeData &amp);
AmplitudeData amplitudes_from_e2(const GeneralE2Params &p);

/// Throws InvalidStateError unless M(A, Lambda) is strictly positive.
void require_valid_state(const CMat &a, const CMat &lambda, double tol = kDefaultTol);

}  // namespace gausskit

#endif
