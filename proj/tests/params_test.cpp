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

#include <gtest/gtest.h>

#include <cmath>

#include "gausskit/fock.hpp"
#include "gausskit/params.hpp"
#include "test_util.hpp"

namespace gausskit {
namespace {

using namespace test_util;

CMat scalar(cplx x) {
    CMat m(1, 1);
    m << x;
    return m;
}

double param_distance(const E2Params &p, const E2Params &q) {
    return std::abs(p.c - q.c) + max_abs(CVec(p.mu - q.mu)) + max_abs(CMat(p.a - q.a)) +
           max_abs(CMat(p.lambda - q.lambda));
}

TEST(CovToE2, Vacuum) {
    CovarianceParams cov{CVec::Zero(3), 0.5 * RMat::Identity(6, 6)};
    E2Params p = cov_to_e2(cov);
    EXPECT_LT(param_distance(p, E2Params::vacuum(3)), 1e-15);
}

TEST(CovToE2, ThermalMode) {
    CovarianceParams cov{CVec::Zero(1), RMat::Identity(2, 2)};
    E2Params p = cov_to_e2(cov);
    EXPECT_NEAR(p.c, 2.0 / 3.0, 1e-15);
    EXPECT_LT(max_abs(p.a), 1e-15);
    EXPECT_NEAR(p.lambda(0, 0).real(), 1.0 / 3.0, 1e-15);
    EXPECT_LT(max_abs(p.mu), 1e-15);
}

TEST(CovToE2, RejectsSingularAndInvalid) {
    RMat s = 0.5 * RMat::Identity(2, 2);
    s(0, 0) = -0.5;
    s(1, 1) = 2;
    // I/2 + S is singular; S also violates the uncertainty relation.
    EXPECT_THROW(cov_to_e2({CVec::Zero(1), s}), Error);
    EXPECT_THROW(cov_to_e2({CVec::Zero(1), 0.1 * RMat::Identity(2, 2)}), InvalidStateError);
}

TEST(E2ToCov, Examples) {
    CovarianceParams cov = e2_to_cov(E2Params::vacuum(2));
    EXPECT_LT((cov.s - 0.5 * RMat::Identity(4, 4)).norm(), 1e-15);
    EXPECT_LT(max_abs(cov.m), 1e-15);

    const double alpha = 0.2;
    E2Params p = E2Params::state(scalar(alpha), scalar(0));
    cov = e2_to_cov(p);
    // S is indexed by the Weyl variable z = x + iy, so S_xx is the momentum variance.
    EXPECT_NEAR(cov.s(0, 0), 0.5 * (1 - 2 * alpha) / (1 + 2 * alpha), 1e-14);
    EXPECT_NEAR(cov.s(1, 1), 0.5 * (1 + 2 * alpha) / (1 - 2 * alpha), 1e-14);
    EXPECT_NEAR(cov.s(0, 1), 0, 1e-15);
}

TEST(E2ToCov, ZeroMeanIffZeroLinearTerm) {
    Rng rng(21);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 1 + trial % 3;
        GaussianState st = random_state(n, rng, 0.0);
        EXPECT_LT(max_abs(st.params().mu), 1e-12);
        GaussianState shifted = random_state(n, rng, 0.5);
        EXPECT_GT(max_abs(shifted.params().mu), 1e-6);
        EXPECT_LT(max_abs(CVec(mean_of_state(shifted.params()) - shifted.cov().m)), 1e-12);
    }
    E2Params bad = E2Params::vacuum(1);
    bad.lambda(0, 0) = 1.0;
    EXPECT_THROW(e2_to_cov(bad), InvalidStateError);
}

TEST(Conversion, RoundTripsBothWays) {
    Rng rng(22);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + trial % 4;
        CovarianceParams cov = random_covariance(n, 0.5, 0.6, 0.5, rng);
        E2Params p = cov_to_e2(cov);
        CovarianceParams back = e2_to_cov(p);
        EXPECT_LT((back.s - cov.s).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LT(max_abs(CVec(back.m - cov.m)), 1e-10);
        EXPECT_LT(param_distance(cov_to_e2(back), p), 1e-10);
    }
}

TEST(Uncertainty, HoldsForValidStates) {
    Rng rng(23);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 1 + trial % 4;
        GaussianState st = random_state(n, rng);
        EXPECT_GE(uncertainty_margin(st.cov().s), -1e-9);
        const E2Params &p = st.params();
        RMat mi = build_M(-p.a, p.lambda).inverse();
        CMat h = mi.cast<cplx>() - 0.5 * (RMat::Identity(2 * n, 2 * n).cast<cplx>() -
                                          cplx(0, 1) * symplectic_form(n).cast<cplx>());
        EXPECT_GE(min_eigenvalue(CMat(0.5 * (h + h.adjoint()))), -1e-9);
    }
}

TEST(Uncertainty, PureStatesHaveBlockStructure) {
    Rng rng(24);
    for (size_t n = 1; n <= 4; n++) {
        GaussianState st = random_pure_state(n, 0.4, rng);
        RMat k = (0.5 * RMat::Identity(2 * n, 2 * n) + st.cov().s).inverse();
        RMat p = k.topLeftCorner(n, n), q = k.topRightCorner(n, n);
        EXPECT_LT((k.bottomLeftCorner(n, n) - q).norm(), 1e-9);
        EXPECT_LT((k.bottomRightCorner(n, n) - (2 * RMat::Identity(n, n) - p)).norm(), 1e-9);
        EXPECT_TRUE(is_pure(st.params()));
    }
    GaussianState mixed = random_state(2, rng);
    RMat k = (0.5 * RMat::Identity(4, 4) + mixed.cov().s).inverse();
    EXPECT_GT((k.bottomRightCorner(2, 2) - (2 * RMat::Identity(2, 2) - k.topLeftCorner(2, 2))).norm(), 1e-3);
}

TEST(Validity, Examples) {
    Rng rng(25);
    for (size_t n = 1; n <= 4; n++) {
        EXPECT_TRUE(is_valid_state(random_symmetric(n, 0.49, rng), CMat::Zero(n, n)));
        CMat l = CMat::Zero(n, n);
        l(0, 0) = 1.0;
        EXPECT_FALSE(is_valid_state(CMat::Zero(n, n), l));
    }
    EXPECT_FALSE(is_valid_state(scalar(0.4), scalar(0.3)));
    EXPECT_TRUE(is_valid_state(scalar(0.34), scalar(0.3)));
    EXPECT_THROW(is_valid_state(CMat::Zero(2, 2), CMat::Zero(3, 3)), ShapeError);
}

TEST(Trace, Examples) {
    Rng rng(26);
    GaussianState st = random_state(3, rng);
    EXPECT_NEAR(trace_of_positive(st.params()), 1, 1e-12);
    E2Params doubled = st.params();
    doubled.c *= 2;
    EXPECT_NEAR(trace_of_positive(doubled), 2, 1e-12);
    E2Params half{1, CVec::Zero(1), scalar(0), scalar(0.5)};
    EXPECT_NEAR(trace_of_positive(half), 2, 1e-14);
    E2Params bad{1, CVec::Zero(1), scalar(0.6), scalar(0)};
    EXPECT_THROW(trace_of_positive(bad), DomainError);
}

TEST(Trace, TruncatedTraceIncreasesToOne) {
    Rng rng(27);
    GaussianState st = random_state(2, rng);
    double prev = 0;
    for (int cutoff = 2; cutoff <= 24; cutoff += 2) {
        double tr = density_matrix(st.params(), cutoff).trace().real();
        EXPECT_GE(tr, prev - 1e-14);
        EXPECT_LE(tr, 1 + 1e-12);
        prev = tr;
    }
    EXPECT_NEAR(prev, trace_of_positive(st.params()), 1e-4);
}

TEST(Normalization, Examples) {
    Rng rng(28);
    CMat a = random_symmetric(2, 0.3, rng);
    CMat l = random_hermitian(2, 0, 0.3, rng);
    if (is_valid_state(a, l)) {
        EXPECT_NEAR(normalization_c(CVec::Zero(2), a, l), c_factor(a, l), 1e-15);
    }
    CVec z = random_vector(3, 0.7, rng);
    EXPECT_NEAR(normalization_c(z, CMat::Zero(3, 3), CMat::Zero(3, 3)), std::exp(-z.squaredNorm()), 1e-14);
    for (int trial = 0; trial < 20; trial++) {
        GaussianState st = random_state(1 + trial % 3, rng);
        const E2Params &p = st.params();
        E2Params q{normalization_c(p.mu, p.a, p.lambda), p.mu, p.a, p.lambda};
        EXPECT_NEAR(trace_of_positive(q), 1, 1e-12);
    }
}

TEST(Purity, Examples) {
    Rng rng(29);
    EXPECT_TRUE(is_pure(random_pure_state(3, 0.3, rng).params()));
    E2Params thermal = E2Params::state(CMat::Zero(2, 2), 0.2 * CMat::Identity(2, 2));
    EXPECT_FALSE(is_pure(thermal));
}

TEST(Amplitudes, Examples) {
    AmplitudeData vac{1, CVec::Zero(2), CVec::Zero(2), CMat::Zero(2, 2), CMat::Zero(2, 2), CMat::Zero(2, 2)};
    GeneralE2Params p = e2_from_amplitudes(vac);
    EXPECT_EQ(p.c, cplx(1));
    EXPECT_EQ(max_abs(p.alpha) + max_abs(p.beta) + max_abs(p.a) + max_abs(p.b) + max_abs(p.lambda), 0);

    // SMSV: <chi_11|rho|Omega> = sqrt 2 c a_11.
    E2Params smsv = E2Params::state(scalar(0.3), scalar(0));
    cplx q = matrix_element(smsv, MultiIndex({2}), MultiIndex({0}));
    EXPECT_NEAR(std::abs(q - std::sqrt(2.0) * smsv.c * 0.3), 0, 1e-15);
    AmplitudeData amp = amplitudes_from_e2(GeneralE2Params::from_e2(smsv));
    EXPECT_NEAR(std::abs(std::sqrt(2.0) * amp.a_z(0, 0) - q), 0, 1e-15);
    vac.vac = 0;
    EXPECT_THROW(e2_from_amplitudes(vac), DomainError);
}

TEST(Amplitudes, RoundTrip) {
    Rng rng(30);
    for (size_t n = 1; n <= 4; n++) {
        GeneralE2Params p{cplx(uniform(rng, 0.1, 2), uniform(rng, -1, 1)),
                          random_vector(n, 1, rng),
                          random_vector(n, 1, rng),
                          random_symmetric(n, 1, rng),
                          random_complex(n, n, rng),
                          random_symmetric(n, 1, rng)};
        GeneralE2Params q = e2_from_amplitudes(amplitudes_from_e2(p));
        EXPECT_LT(std::abs(q.c - p.c), 1e-12);
        EXPECT_LT(max_abs(CVec(q.alpha - p.alpha)) + max_abs(CVec(q.beta - p.beta)), 1e-12);
        EXPECT_LT(max_abs(CMat(q.a - p.a)) + max_abs(CMat(q.b - p.b)) + max_abs(CMat(q.lambda - p.lambda)), 1e-12);
    }
}

TEST(Amplitudes, MatchParticleBasisEntries) {
    Rng rng(31);
    GaussianState st = random_state(3, rng);
    const E2Params &p = st.params();
    AmplitudeData amp = amplitudes_from_e2(GeneralE2Params::from_e2(p));
    const size_t n = 3;
    MultiIndex omega = MultiIndex::zeros(n);
    EXPECT_NEAR(std::abs(matrix_element(p, omega, omega) - amp.vac), 0, 1e-14);
    for (size_t j = 0; j < n; j++) {
        EXPECT_NEAR(std::abs(matrix_element(p, MultiIndex::unit(n, j), omega) - amp.lam_z(j)), 0, 1e-14);
        EXPECT_NEAR(std::abs(matrix_element(p, omega, MultiIndex::unit(n, j)) - amp.mu_z(j)), 0, 1e-14);
        for (size_t k = 0; k < n; k++) {
            EXPECT_NEAR(
                std::abs(matrix_element(p, MultiIndex::unit(n, j), MultiIndex::unit(n, k)) - amp.lambda_z(j, k)), 0,
                1e-14);
            double w = j == k ? std::sqrt(2.0) : 2.0;
            EXPECT_NEAR(std::abs(matrix_element(p, MultiIndex::pair(n, j, k), omega) - w * amp.a_z(j, k)), 0, 1e-14);
        }
    }
}

TEST(GeneralParams, SelfAdjointCollapse) {
    Rng rng(32);
    GaussianState st = random_state(2, rng);
    GeneralE2Params g = GeneralE2Params::from_e2(st.params());
    EXPECT_TRUE(g.is_self_adjoint());
    EXPECT_LT(param_distance(g.to_e2(), st.params()), 1e-15);
    g.lambda(0, 1) += 0.1;
    EXPECT_FALSE(g.is_self_adjoint());
    EXPECT_THROW(g.to_e2(), DomainError);
}

}  // namespace
}  // namespace gausskit
