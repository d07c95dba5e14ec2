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

#include "gausskit/params.hpp"

#include <cmath>

namespace gausskit {

namespace {

void require_sizes(const CVec &mu, const CMat &a, const CMat &lambda) {
    if (a.rows() != a.cols() || lambda.rows() != lambda.cols() || a.rows() != lambda.rows() ||
        mu.size() != a.rows()) {
        throw ShapeError("inconsistent parameter dimensions");
    }
}

// (Re mu, Im mu)^T M^{-1} (Re mu, Im mu).
double mean_quadratic(const CVec &mu, const RMat &m) {
    RVec mr = realify(mu);
    if (mr.size() == 0) {
        return 0;
    }
    return mr.dot(m.ldlt().solve(mr));
}

}  // namespace

E2Params E2Params::vacuum(size_t n) {
    return E2Params{1, CVec::Zero(n), CMat::Zero(n, n), CMat::Zero(n, n)};
}

E2Params E2Params::state(const CMat &a, const CMat &lambda, const CVec &mu) {
    E2Params p{1, mu.size() ? mu : CVec::Zero(a.rows()), a, lambda};
    p.canonicalize();
    p.c = normalization_c(p.mu, p.a, p.lambda);
    return p;
}

void E2Params::canonicalize() {
    require_sizes(mu, a, lambda);
    require_symmetric(a, "A");
    require_hermitian(lambda, "Lambda");
    a = 0.5 * (a + a.transpose()).eval();
    lambda = 0.5 * (lambda + lambda.adjoint()).eval();
}

GeneralE2Params GeneralE2Params::identity(size_t n) {
    return GeneralE2Params{1, CVec::Zero(n), CVec::Zero(n), CMat::Zero(n, n), CMat::Identity(n, n), CMat::Zero(n, n)};
}

GeneralE2Params GeneralE2Params::from_e2(const E2Params &p) {
    return GeneralE2Params{p.c, p.mu, p.mu.conjugate(), p.a, p.lambda, p.a.conjugate()};
}

bool GeneralE2Params::is_self_adjoint(double tol) const {
    double scale = 1 + std::abs(c);
    return std::abs(c.imag()) <= tol * scale && (beta - alpha.conjugate()).cwiseAbs().maxCoeff() <= tol * (1 + alpha.cwiseAbs().maxCoeff()) &&
           (b - a.conjugate()).cwiseAbs().maxCoeff() <= tol * (1 + a.cwiseAbs().maxCoeff()) &&
           is_hermitian(lambda, tol);
}

E2Params GeneralE2Params::to_e2(double tol) const {
    if (n() > 0 ? !is_self_adjoint(tol) : std::abs(c.imag()) > tol * (1 + std::abs(c))) {
        throw DomainError("parameters are not self-adjoint");
    }
    E2Params p{c.real(), alpha, a, lambda};
    p.a = 0.5 * (p.a + p.a.transpose()).eval();
    p.lambda = 0.5 * (p.lambda + p.lambda.adjoint()).eval();
    return p;
}

double uncertainty_margin(const RMat &s) {
    const auto n = (size_t)s.rows() / 2;
    CMat h = s.cast<cplx>() + cplx(0, 0.5) * symplectic_form(n).cast<cplx>();
    return min_eigenvalue(h);
}

E2Params cov_to_e2(const CovarianceParams &cov, double tol) {
    const auto n = cov.n();
    if (cov.s.rows() != (Eigen::Index)(2 * n) || cov.s.cols() != (Eigen::Index)(2 * n)) {
        throw ShapeError("covariance matrix must be 2n x 2n");
    }
    RMat s = 0.5 * (cov.s + cov.s.transpose());
    if (uncertainty_margin(s) < -tol * (1 + spectral_norm(s))) {
        throw InvalidStateError("covariance violates S + (i/2) J >= 0");
    }
    RMat half_plus_s = 0.5 * RMat::Identity(2 * n, 2 * n) + s;
    Eigen::FullPivLU<RMat> lu(half_plus_s);
    if (!lu.isInvertible()) {
        throw DomainError("I/2 + S is singular");
    }
    RMat k = lu.inverse();
    k = 0.5 * (k + k.transpose()).eval();
    RMat j = symplectic_form(n);
    RVec mr = realify(cov.m);

    CMat row(n, 2 * n);  // [I, iI]
    row << CMat::Identity(n, n), cplx(0, 1) * CMat::Identity(n, n);
    CMat col_plus(2 * n, n);  // [I; iI]
    col_plus << CMat::Identity(n, n), cplx(0, 1) * CMat::Identity(n, n);
    CMat col_minus(2 * n, n);  // [I; -iI]
    col_minus << CMat::Identity(n, n), cplx(0, -1) * CMat::Identity(n, n);
    CMat kc = k.cast<cplx>();

    E2Params p;
    double det = half_plus_s.determinant();
    p.c = std::exp(mr.dot(j * k * j * mr)) / std::sqrt(det);
    p.mu = cplx(0, 1) * (row * (kc * (j * mr).cast<cplx>()));
    p.a = 0.25 * row * kc * col_plus;
    p.lambda = CMat::Identity(n, n) - 0.5 * row * kc * col_minus;
    p.a = 0.5 * (p.a + p.a.transpose()).eval();
    p.lambda = 0.5 * (p.lambda + p.lambda.adjoint()).eval();
    return p;
}

void require_valid_state(const CMat &a, const CMat &lambda, double tol) {
    if (!is_valid_state(a, lambda, tol)) {
        throw InvalidStateError("M(A, Lambda) is not strictly positive definite");
    }
}

CovarianceParams e2_to_cov(const E2Params &p, double tol) {
    require_valid_state(p.a, p.lambda, tol);
    const auto n = p.n();
    RMat m_minus = build_M(-p.a, p.lambda);
    CovarianceParams cov;
    cov.s = m_minus.inverse() - 0.5 * RMat::Identity(2 * n, 2 * n);
    cov.s = 0.5 * (cov.s + cov.s.transpose()).eval();
    cov.m = mean_of_state(p, tol);
    return cov;
}

bool is_valid_state(const CMat &a, const CMat &lambda, double tol) {
    if (a.rows() != lambda.rows()) {
        throw ShapeError("A and Lambda have different sizes");
    }
    return is_positive_definite(build_M(a, lambda), tol);
}

double trace_of_positive(const E2Params &p, double tol) {
    require_sizes(p.mu, p.a, p.lambda);
    if (!is_valid_state(p.a, p.lambda, tol)) {
        throw DomainError("not trace class: M(A, Lambda) is not strictly positive definite");
    }
    RMat m = build_M(p.a, p.lambda);
    return p.c / c_factor(p.a, p.lambda, tol) * std::exp(mean_quadratic(p.mu, m));
}

double normalization_c(const CVec &mu, const CMat &a, const CMat &lambda, double tol) {
    require_sizes(mu, a, lambda);
    require_valid_state(a, lambda, tol);
    RMat m = build_M(a, lambda);
    return c_factor(a, lambda, tol) * std::exp(-mean_quadratic(mu, m));
}

bool is_pure(const E2Params &p, double tol) {
    return p.lambda.size() == 0 || spectral_norm(p.lambda) <= tol;
}

CVec mean_of_state(const E2Params &p, double tol) {
    require_sizes(p.mu, p.a, p.lambda);
    require_valid_state(p.a, p.lambda, tol);
    RMat m = build_M(p.a, p.lambda);
    return complexify(RVec(m.ldlt().solve(realify(p.mu))));
}

GeneralE2Params e2_from_amplitudes(const AmplitudeData &amp) {
    if (amp.vac == cplx(0)) {
        throw DomainError("vacuum amplitude is zero");
    }
    GeneralE2Params p;
    p.c = amp.vac;
    p.alpha = amp.lam_z / amp.vac;
    p.beta = amp.mu_z / amp.vac;
    p.a = amp.a_z / amp.vac - 0.5 * p.alpha * p.alpha.transpose();
    p.b = amp.b_z / amp.vac - 0.5 * p.beta * p.beta.transpose();
    p.lambda = amp.lambda_z / amp.vac - p.alpha * p.beta.transpose();
    return p;
}

AmplitudeData amplitudes_from_e2(const GeneralE2Params &p) {
    AmplitudeData amp;
    amp.vac = p.c;
    amp.lam_z = p.c * p.alpha;
    amp.mu_z = p.c * p.beta;
    amp.a_z = p.c * (p.a + 0.5 * p.alpha * p.alpha.transpose());
    amp.b_z = p.c * (p.b + 0.5 * p.beta * p.beta.transpose());
    amp.lambda_z = p.c * (p.lambda + p.alpha * p.beta.transpose());
    return amp;
}

}  // namespace gausskit
