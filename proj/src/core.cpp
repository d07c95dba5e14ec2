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

#include "gausskit/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace gausskit {

RMat realify(const CMat &map) {
    const auto r = map.rows();
    const auto c = map.cols();
    RMat out(2 * r, 2 * c);
    out.topLeftCorner(r, c) = map.real();
    out.topRightCorner(r, c) = -map.imag();
    out.bottomLeftCorner(r, c) = map.imag();
    out.bottomRightCorner(r, c) = map.real();
    return out;
}

CMat complexify(const RMat &l0) {
    const auto r = l0.rows() / 2;
    const auto c = l0.cols() / 2;
    CMat out(r, c);
    out.real() = 0.5 * (l0.topLeftCorner(r, c) + l0.bottomRightCorner(r, c));
    out.imag() = 0.5 * (l0.bottomLeftCorner(r, c) - l0.topRightCorner(r, c));
    return out;
}

RVec realify(const CVec &z) {
    RVec out(2 * z.size());
    out << z.real(), z.imag();
    return out;
}

CVec complexify(const RVec &xy) {
    const auto n = xy.size() / 2;
    CVec out(n);
    out.real() = xy.head(n);
    out.imag() = xy.tail(n);
    return out;
}

RMat symplectic_form(size_t n) {
    RMat j = RMat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n).setIdentity();
    j.bottomLeftCorner(n, n) = -RMat::Identity(n, n);
    return j;
}

RMat conjugation_form(size_t n) {
    RMat c = RMat::Identity(2 * n, 2 * n);
    c.bottomRightCorner(n, n) *= -1;
    return c;
}

double spectral_norm(const CMat &m) {
    if (m.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<CMat> svd(m);
    return svd.singularValues()(0);
}

double spectral_norm(const RMat &m) {
    if (m.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<RMat> svd(m);
    return svd.singularValues()(0);
}

bool is_symmetric(const CMat &a, double tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    if (a.size() == 0) {
        return true;
    }
    return (a - a.transpose()).cwiseAbs().maxCoeff() <= tol * (1 + a.cwiseAbs().maxCoeff());
}

bool is_hermitian(const CMat &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    if (m.size() == 0) {
        return true;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * (1 + m.cwiseAbs().maxCoeff());
}

void require_symmetric(const CMat &a, const char *name) {
    if (a.rows() != a.cols()) {
        throw ShapeError(std::string(name) + " must be square");
    }
    if (!is_symmetric(a)) {
        throw DomainError(std::string(name) + " must be symmetric");
    }
}

void require_hermitian(const CMat &m, const char *name) {
    if (m.rows() != m.cols()) {
        throw ShapeError(std::string(name) + " must be square");
    }
    if (!is_hermitian(m)) {
        throw DomainError(std::string(name) + " must be hermitian");
    }
}

RMat build_M(const CMat &a, const CMat &lambda) {
    require_symmetric(a, "A");
    require_hermitian(lambda, "Lambda");
    if (a.rows() != lambda.rows()) {
        throw ShapeError("A and Lambda have different sizes");
    }
    const auto n = a.rows();
    RMat a0c0(2 * n, 2 * n);
    a0c0 << a.real(), a.imag(), a.imag(), -a.real();
    RMat m = RMat::Identity(2 * n, 2 * n) - realify(lambda) - 2 * a0c0;
    return 0.5 * (m + m.transpose());
}

double min_eigenvalue(const RMat &m) {
    if (m.size() == 0) {
        return INFINITY;
    }
    Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

double min_eigenvalue(const CMat &m) {
    if (m.size() == 0) {
        return INFINITY;
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

double c_factor(const CMat &a, const CMat &lambda, double tol) {
    RMat m = build_M(a, lambda);
    double lo = min_eigenvalue(m);
    if (lo < -tol * (1 + spectral_norm(m))) {
        throw DomainError("M(A, Lambda) is not positive semidefinite");
    }
    if (lo <= 0) {
        return 0;
    }
    Eigen::LDLT<RMat> ldlt(m);
    double logdet = ldlt.vectorD().array().log().sum();
    return std::exp(0.5 * logdet);
}

cplx gaussian_integral(const CMat &a, const CVec &m) {
    require_symmetric(a, "A");
    if (m.size() != a.rows()) {
        throw ShapeError("gaussian_integral: vector length does not match A");
    }
    const auto n = a.rows();
    if (!is_positive_definite(RMat(0.5 * (a.real() + a.real().transpose())), 0.0)) {
        throw DomainError("gaussian_integral: Re A must be strictly positive definite");
    }
    Eigen::ComplexEigenSolver<CMat> es(a, false);
    cplx inv_sqrt_det = 1;
    for (Eigen::Index k = 0; k < n; k++) {
        // 1/lambda stays in the right half-plane, where the principal root has positive real part.
        inv_sqrt_det *= std::sqrt(cplx(1) / es.eigenvalues()(k));
    }
    CVec x = a.partialPivLu().solve(m);
    cplx quad = m.transpose() * x;
    return std::pow(std::numbers::pi, 0.5 * (double)n) * inv_sqrt_det * std::exp(0.25 * quad);
}

namespace {

template <typename M>
bool positive_definite_impl(const M &m, double tol) {
    if (m.rows() != m.cols()) {
        throw ShapeError("positivity test needs a square matrix");
    }
    if (m.size() == 0) {
        return true;
    }
    double scale = 1 + m.cwiseAbs().maxCoeff();
    double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > std::max(tol, 1e-12) * scale) {
        throw DomainError("positivity test needs a (conjugate-)symmetric matrix");
    }
    return min_eigenvalue(m) > tol * (1 + spectral_norm(m));
}

}  // namespace

bool is_positive_definite(const RMat &m, double tol) {
    return positive_definite_impl(m, tol);
}

bool is_positive_definite(const CMat &m, double tol) {
    return positive_definite_impl(m, tol);
}

CMat psd_sqrt(const CMat &m) {
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (m + m.adjoint()));
    RVec ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

TakagiFactorization takagi(const CMat &a) {
    require_symmetric(a, "A");
    const auto n = a.rows();
    CMat sym = 0.5 * (a + a.transpose());

    // The real-linear map z -> A conj(z) is realified to the symmetric matrix [[Re A, Im A], [Im A, -Re A]].
    // Its spectrum is {+d_j, -d_j}; an eigenvector z for +d satisfies A conj(z) = d z, which is exactly a
    // Takagi column, and real-orthonormal eigenvectors for distinct positive d are complex-orthonormal.
    RMat h(2 * n, 2 * n);
    h << sym.real(), sym.imag(), sym.imag(), -sym.real();
    Eigen::SelfAdjointEigenSolver<RMat> es(h);

    double scale = 1 + sym.cwiseAbs().maxCoeff();
    double zero_cut = 1e-13 * scale;
    TakagiFactorization out{CMat::Zero(n, n), RVec::Zero(n)};
    Eigen::Index filled = 0;
    for (Eigen::Index k = 2 * n - 1; k >= 0 && filled < n; k--) {
        double d = es.eigenvalues()(k);
        if (d <= zero_cut) {
            break;
        }
        out.u.col(filled) = complexify(RVec(es.eigenvectors().col(k)));
        out.d(filled) = d;
        filled++;
    }

    // Null directions of A: any orthonormal completion works.
    for (Eigen::Index e = 0; e < n && filled < n; e++) {
        CVec v = CVec::Unit(n, e);
        for (int pass = 0; pass < 2; pass++) {
            for (Eigen::Index j = 0; j < filled; j++) {
                v -= out.u.col(j) * out.u.col(j).dot(v);
            }
        }
        double nv = v.norm();
        if (nv > 1e-6) {
            out.u.col(filled) = v / nv;
            out.d(filled) = 0;
            filled++;
        }
    }
    return out;
}

SymplecticMap SymplecticMap::from_matrix(const RMat &l0, double tol) {
    if (l0.rows() != l0.cols() || l0.rows() % 2 != 0) {
        throw ShapeError("symplectic matrix must be 2n x 2n");
    }
    const auto n = (size_t)l0.rows() / 2;
    RMat j = symplectic_form(n);
    double err = (l0.transpose() * j * l0 - j).cwiseAbs().maxCoeff();
    double scale = 1 + l0.cwiseAbs().maxCoeff() * l0.cwiseAbs().maxCoeff();
    if (err > tol * scale) {
        throw DomainError("matrix is not symplectic");
    }
    return SymplecticMap(l0);
}

SymplecticMap SymplecticMap::from_unitary(const CMat &u, double tol) {
    if (u.rows() != u.cols()) {
        throw ShapeError("unitary must be square");
    }
    if ((u.adjoint() * u - CMat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() > tol) {
        throw DomainError("matrix is not unitary");
    }
    return SymplecticMap(realify(u));
}

SymplecticMap SymplecticMap::identity(size_t n) {
    return SymplecticMap(RMat::Identity(2 * n, 2 * n));
}

SymplecticMap SymplecticMap::operator*(const SymplecticMap &other) const {
    return SymplecticMap(l0_ * other.l0_);
}

}  // namespace gausskit
