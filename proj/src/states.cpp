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

#include "gausskit/states.hpp"

#include <algorithm>
#include <cmath>

#include "gausskit/semigroup.hpp"

namespace gausskit {

namespace {

std::vector<Eigen::Index> as_index(const std::vector<size_t> &modes) {
    return std::vector<Eigen::Index>(modes.begin(), modes.end());
}

// Rows/columns (x_j, y_j) of the kept modes in the (x, y) splitting.
std::vector<Eigen::Index> quadrature_index(const std::vector<size_t> &modes, size_t n) {
    std::vector<Eigen::Index> out;
    for (size_t m : modes) {
        out.push_back((Eigen::Index)m);
    }
    for (size_t m : modes) {
        out.push_back((Eigen::Index)(m + n));
    }
    return out;
}

void require_positive_lambda(const CMat &lambda, double tol) {
    if (lambda.size() && min_eigenvalue(lambda) < -tol * (1 + spectral_norm(lambda))) {
        throw InvalidStateError("Lambda is not positive semidefinite");
    }
}

}  // namespace

GaussianState GaussianState::from_e2(const E2Params &p, double tol) {
    E2Params q = p;
    q.canonicalize();
    require_valid_state(q.a, q.lambda, tol);
    require_positive_lambda(q.lambda, tol);
    double tr = trace_of_positive(q, tol);
    if (std::abs(tr - 1) > 1e-10) {
        throw InvalidStateError("state parameters are not normalized (trace " + std::to_string(tr) + ")");
    }
    CovarianceParams cov = e2_to_cov(q, tol);
    return GaussianState(std::move(q), std::move(cov), tol);
}

GaussianState GaussianState::from_covariance(const CovarianceParams &cov, double tol) {
    E2Params p = cov_to_e2(cov, tol);
    require_valid_state(p.a, p.lambda, tol);
    CovarianceParams c = cov;
    c.s = 0.5 * (c.s + c.s.transpose()).eval();
    return GaussianState(std::move(p), std::move(c), tol);
}

GaussianState GaussianState::from_parameters(const CMat &a, const CMat &lambda, const CVec &mu, double tol) {
    E2Params p{1, mu.size() ? mu : CVec::Zero(a.rows()), a, lambda};
    p.canonicalize();
    require_valid_state(p.a, p.lambda, tol);
    require_positive_lambda(p.lambda, tol);
    p.c = normalization_c(p.mu, p.a, p.lambda, tol);
    CovarianceParams cov = e2_to_cov(p, tol);
    return GaussianState(std::move(p), std::move(cov), tol);
}

GaussianState GaussianState::vacuum(size_t n) {
    return from_e2(E2Params::vacuum(n));
}

void ModeBipartition::validate(size_t n) const {
    if (subset.empty() || subset.size() >= n) {
        throw DomainError("bipartition needs a nonempty proper subset of the modes");
    }
    std::vector<size_t> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= n) {
        throw DomainError("bipartition subset has repeated or out-of-range modes");
    }
}

std::vector<size_t> ModeBipartition::complement(size_t n) const {
    validate(n);
    std::vector<size_t> out;
    for (size_t m = 0; m < n; m++) {
        if (std::find(subset.begin(), subset.end(), m) == subset.end()) {
            out.push_back(m);
        }
    }
    return out;
}

cplx characteristic_function(const GaussianState &state, const CVec &z) {
    if (z.size() != (Eigen::Index)state.n()) {
        throw ShapeError("characteristic_function: z has the wrong size");
    }
    const CovarianceParams &cov = state.cov();
    double im_overlap = z.dot(cov.m).imag();
    RVec w = realify(z);
    return std::exp(cplx(-w.dot(cov.s * w), -2 * im_overlap));
}

NumberDistribution number_distribution(const GaussianState &state, int cutoff) {
    TruncatedOperator rho = density_matrix(state.params(), cutoff, state.tol());
    NumberDistribution out;
    double total = 0;
    for (size_t k = 0; k < rho.basis->dim(); k++) {
        double p = std::max(0.0, rho.m((Eigen::Index)k, (Eigen::Index)k).real());
        out.probabilities.emplace(rho.basis->state(k), p);
        total += p;
    }
    out.tail = std::max(0.0, 1 - total);
    return out;
}

GaussianState marginal(const GaussianState &state, const std::vector<size_t> &keep) {
    ModeBipartition{keep}.validate(state.n());
    const CovarianceParams &cov = state.cov();
    auto q = quadrature_index(keep, state.n());
    CovarianceParams reduced{cov.m(as_index(keep)), cov.s(q, q)};
    return GaussianState::from_covariance(reduced, state.tol());
}

E2Params marginal_params(const GaussianState &state, const std::vector<size_t> &keep, MarginalMethod method) {
    if (method == MarginalMethod::kCovariance) {
        return marginal(state, keep).params();
    }
    const size_t n = state.n();
    std::vector<size_t> traced = ModeBipartition{keep}.complement(n);
    auto k = as_index(keep);
    auto t = as_index(traced);
    const E2Params &p = state.params();
    const double tol = state.tol();
    const auto n0 = (Eigen::Index)keep.size();

    CMat a00 = p.a(k, k), a01 = p.a(k, t), a11 = p.a(t, t);
    CMat l00 = p.lambda(k, k), l01 = p.lambda(k, t), l11 = p.lambda(t, t);
    RMat m11 = build_M(a11, l11);
    CMat c01(n0, 2 * (Eigen::Index)traced.size());
    c01 << l01 + 2.0 * a01, cplx(0, 1) * (l01 - 2.0 * a01);
    CMat solved = m11.cast<cplx>().partialPivLu().solve(CMat(c01.transpose()));  // M^-1 C^T
    CMat solved_h = m11.cast<cplx>().partialPivLu().solve(CMat(c01.adjoint()));   // M^-1 C^dagger
    double lambda_weight = method == MarginalMethod::kPrintedFormula ? 0.25 : 0.5;

    E2Params out;
    out.a = a00 + 0.25 * c01 * solved;
    out.lambda = l00 + lambda_weight * c01 * solved_h;
    out.a = 0.5 * (out.a + out.a.transpose()).eval();
    out.lambda = 0.5 * (out.lambda + out.lambda.adjoint()).eval();
    out.mu = CVec::Zero(n0);
    out.c = c_factor(p.a, p.lambda, tol) / c_factor(a11, l11, tol);

    CVec m0 = state.cov().m(k);
    if (m0.size() && m0.cwiseAbs().maxCoeff() > 0) {
        RMat m = build_M(out.a, out.lambda);
        RVec mu_r = m * realify(m0);
        out.mu = complexify(mu_r);
        out.c *= std::exp(-mu_r.dot(m.ldlt().solve(mu_r)));
    }
    return out;
}

double offdiag_norm(const GaussianState &state, const ModeBipartition &split) {
    std::vector<size_t> other = split.complement(state.n());
    return state.params().a(as_index(split.subset), as_index(other)).norm();
}

bool is_pure_separable(const GaussianState &state, const ModeBipartition &split) {
    if (!is_pure(state.params(), state.tol())) {
        throw UnsupportedError("separability criterion applies to pure states only");
    }
    return offdiag_norm(state, split) <= state.tol();
}

std::vector<ModeBipartition> all_bipartitions(size_t n) {
    std::vector<ModeBipartition> out;
    if (n < 2) {
        return out;
    }
    // Subsets containing mode 0, excluding the full set.
    for (size_t mask = 0; mask + 1 < ((size_t)1 << (n - 1)); mask++) {
        ModeBipartition b;
        b.subset.push_back(0);
        for (size_t m = 1; m < n; m++) {
            if (mask & ((size_t)1 << (m - 1))) {
                b.subset.push_back(m);
            }
        }
        out.push_back(b);
    }
    return out;
}

bool is_completely_entangled_pure(const GaussianState &state) {
    if (!is_pure(state.params(), state.tol())) {
        throw UnsupportedError("complete entanglement test applies to pure states only");
    }
    for (const auto &split : all_bipartitions(state.n())) {
        if (is_pure_separable(state, split)) {
            return false;
        }
    }
    return state.n() >= 2;
}

bool completely_entangled_certificate(const CMat &a, double tol) {
    const auto n = a.rows();
    if (n < 2 || spectral_norm(a) >= 0.5) {
        return false;
    }
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            if (i != j && std::abs(a(i, j)) <= tol) {
                return false;
            }
        }
    }
    return true;
}

NormalForm normal_form(const GaussianState &state) {
    const E2Params &p = state.params();
    const size_t n = state.n();
    NormalForm out;
    out.displacement = state.cov().m;
    E2Params centered = conjugate_by_weyl(p, out.displacement);
    centered.mu.setZero();

    if (is_pure(p, state.tol())) {
        TakagiFactorization tk = takagi(centered.a);
        out.unitary = tk.u.adjoint();
    } else {
        Eigen::SelfAdjointEigenSolver<CMat> es(centered.lambda);
        CMat v(n, n);
        for (size_t k = 0; k < n; k++) {
            v.col((Eigen::Index)k) = es.eigenvectors().col((Eigen::Index)(n - 1 - k));
        }
        out.unitary = v.adjoint();
    }
    out.canonical = conjugate_by_gamma(centered, out.unitary);
    return out;
}

E2Params from_normal_form(const NormalForm &nf) {
    E2Params back = conjugate_by_gamma(nf.canonical, nf.unitary.adjoint());
    return conjugate_by_weyl(back, -nf.displacement);
}

}  // namespace gausskit
