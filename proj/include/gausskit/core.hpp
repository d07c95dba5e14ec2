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

#ifndef _GAUSSKIT_CORE_H
#define _GAUSSKIT_CORE_H

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "gausskit/error.hpp"

namespace gausskit {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Default relative tolerance for positivity and structure checks.
constexpr double kDefaultTol = 1e-10;

/// Realification of a complex-linear map on C^n in the (x, y) splitting:
/// [[Re L, -Im L], [Im L, Re L]].
RMat realify(const CMat &map);

/// Inverse of `realify` for matrices that commute with J.
CMat complexify(const RMat &l0);

/// Realified vector (Re z, Im z).
RVec realify(const CVec &z);

/// Complex vector x + iy from (x, y).
CVec complexify(const RVec &xy);

/// The symplectic form J = [[0, I], [-I, 0]].
RMat symplectic_form(size_t n);

/// Realification of complex conjugation, C0 = diag(I, -I).
RMat conjugation_form(size_t n);

/// Largest singular value.
double spectral_norm(const CMat &m);
double spectral_norm(const RMat &m);

bool is_symmetric(const CMat &a, double tol = kDefaultTol);
bool is_hermitian(const CMat &m, double tol = kDefaultTol);

/// Throws ShapeError / DomainError unless `a` is square and symmetric.
void require_symmetric(const CMat &a, const char *name);
/// Throws ShapeError / DomainError unless `m` is square and hermitian.
void require_hermitian(const CMat &m, const char *name);

/// M(A, Λ) = I - Λ0 - 2 A0 C0, the real symmetric 2n x 2n matrix controlling validity and normalization.
RMat build_M(const CMat &a, const CMat &lambda);

/// sqrt(det M(A, Λ)). Throws DomainError when M is not positive semidefinite.
double c_factor(const CMat &a, const CMat &lambda, double tol = kDefaultTol);

/// Integral over R^n of exp(-x^T A x + m^T x) for complex symmetric A with Re A > 0.
///
/// det(A)^(-1/2) is taken as the product of lambda_j^(-1/2) over the eigenvalues of A,
/// each factor chosen with positive real part.
cplx gaussian_integral(const CMat &a, const CVec &m);

/// Smallest eigenvalue of a real symmetric / complex hermitian matrix.
double min_eigenvalue(const RMat &m);
double min_eigenvalue(const CMat &m);

/// True iff the smallest eigenvalue exceeds tol * (1 + ||M||_2).
/// Throws DomainError for non-symmetric input.
bool is_positive_definite(const RMat &m, double tol = kDefaultTol);
bool is_positive_definite(const CMat &m, double tol = kDefaultTol);

/// Hermitian square root with eigenvalues clamped at zero.
CMat psd_sqrt(const CMat &m);

struct TakagiFactorization {
    CMat u;  // unitary
    RVec d;  // nonnegative, descending
};

/// Factor a complex symmetric A as U diag(d) U^T.
TakagiFactorization takagi(const CMat &a);

/// A real 2n x 2n matrix L0 with L0^T J L0 = J.
class SymplecticMap {
   public:
    /// Validates the symplectic condition within `tol` (relative to ||L0||^2).
    static SymplecticMap from_matrix(const RMat &l0, double tol = 1e-9);
    /// Symplectic embedding of a unitary U via its realification.
    static SymplecticMap from_unitary(const CMat &u, double tol = 1e-9);
    static SymplecticMap identity(size_t n);

    const RMat &l0() const {
        return l0_;
    }
    size_t n() const {
        return (size_t)l0_.rows() / 2;
    }
    SymplecticMap operator*(const SymplecticMap &other) const;

   private:
    explicit SymplecticMap(RMat l0) : l0_(std::move(l0)) {
    }
    RMat l0_;
};

}  // namespace gausskit

#endif
