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

#ifndef _GAUSSKIT_FOCK_H
#define _GAUSSKIT_FOCK_H

#include <memory>
#include <vector>

#include "gausskit/multi_index.hpp"
#include "gausskit/params.hpp"

namespace gausskit {

/// Dense operator on the truncated particle basis {|t> : |t| <= cutoff}.
struct TruncatedOperator {
    std::shared_ptr<const FockBasis> basis;
    CMat m;

    cplx operator()(const MultiIndex &r, const MultiIndex &s) const;
    cplx trace() const {
        return m.trace();
    }
};

/// Dense vector on the truncated particle basis.
struct TruncatedVector {
    std::shared_ptr<const FockBasis> basis;
    CVec v;

    cplx operator[](const MultiIndex &t) const;
};

std::shared_ptr<const FockBasis> make_basis(size_t n, int cutoff);

/// All R with r~(R) = t, in depth-first order; empty when |t| is odd.
std::vector<UpperTriangularCount> enumerate_delta(const MultiIndex &t);

/// phi_B(t) = sqrt(t!) sum_{R in Delta(t)} 2^(|R| - tr R) B^R / R!.
cplx phi(const CMat &b, const MultiIndex &t);

/// phi_B(t) for every basis state.
CVec phi_table(const CMat &b, const FockBasis &basis);

/// sqrt(t!) times the coefficient of z^t in exp(mu^T z + z^T B z), for every basis state.
CVec series_table(const CVec &mu, const CMat &b, const FockBasis &basis);

/// <k|Gamma(Lambda)|l> by exact enumeration of nonnegative integer matrices with row sums k and
/// column sums l. Cost grows exponentially with |k|.
cplx gamma_lambda_entry(const CMat &lambda, const MultiIndex &k, const MultiIndex &l);

/// Gamma(Lambda) on the whole window, built sector by sector from creation operators.
TruncatedOperator gamma_lambda_matrix(const CMat &lambda, int cutoff);

/// E_A(t, s) = sqrt(binom(t, s)) phi_A(t - s) for s <= t.
TruncatedOperator e_a_matrix(const CMat &a, int cutoff);

/// The same lower-triangular structure with phi_A replaced by the coefficients of exp(mu^T z + z^T A z).
TruncatedOperator e_matrix(const CVec &mu, const CMat &a, int cutoff);

/// Density matrix c(A, Lambda) E_A Gamma(Lambda) E_A^dagger of the mean-zero state.
TruncatedOperator dmf(const CMat &a, const CMat &lambda, int cutoff, double tol = kDefaultTol);

/// Density matrix of a state with arbitrary linear coefficient. Equals c E Gamma(Lambda) E^dagger; computed by the
/// power-series recursion of general_truncate, with z1_matrix as the independent factored form.
TruncatedOperator density_matrix(const E2Params &p, int cutoff, double tol = kDefaultTol);

/// One entry <t|rho(A, Lambda)|t'> of the mean-zero state, without building matrices.
cplx matrix_element(const CMat &a, const CMat &lambda, const MultiIndex &t, const MultiIndex &tp,
                    double tol = kDefaultTol);

/// One entry <t|Z|t'> of the positive element with parameters p (any mu).
cplx matrix_element(const E2Params &p, const MultiIndex &t, const MultiIndex &tp);

/// sqrt(c(A, 0)) phi_A(t) for |t| <= cutoff.
TruncatedVector pure_state_vector(const CMat &a, int cutoff);

/// State vector of a pure state with any linear coefficient, phase fixed by <Omega|psi> > 0.
TruncatedVector pure_state_vector(const E2Params &p, int cutoff, double tol = kDefaultTol);

/// Z1 = sqrt(c) Gamma(sqrt(Lambda)) exp(conj(mu)^T a + a^T conj(A) a), so that Z = Z1^dagger Z1.
TruncatedOperator z1_matrix(const E2Params &p, int cutoff);

/// Matrix of a general element of the semigroup, from the power series of its generating function.
TruncatedOperator general_truncate(const GeneralE2Params &p, int cutoff);

/// Advisory truncation tail estimate: max(0, 1 - trace) plus a geometric extrapolation
/// from the weights of the last two shells.
double tail_bound(const TruncatedOperator &rho);

/// Worker count for parallel assembly; GAUSSKIT_THREADS caps it.
size_t worker_count();

}  // namespace gausskit

#endif
