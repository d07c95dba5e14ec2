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

#ifndef _GAUSSKIT_STATES_H
#define _GAUSSKIT_STATES_H

#include <map>
#include <vector>

#include "gausskit/fock.hpp"
#include "gausskit/params.hpp"

namespace gausskit {

/// A normalized n-mode Gaussian state. Immutable after construction.
class GaussianState {
   public:
    /// Validates M(A, Lambda) > 0 and unit trace (within 1e-10).
    static GaussianState from_e2(const E2Params &p, double tol = kDefaultTol);
    static GaussianState from_covariance(const CovarianceParams &cov, double tol = kDefaultTol);
    /// Normalization constant derived from (mu, A, Lambda).
    static GaussianState from_parameters(const CMat &a, const CMat &lambda, const CVec &mu = CVec(),
                                         double tol = kDefaultTol);
    static GaussianState vacuum(size_t n);

    size_t n() const {
        return params_.n();
    }
    const E2Params &params() const {
        return params_;
    }
    const CovarianceParams &cov() const {
        return cov_;
    }
    double tol() const {
        return tol_;
    }

   private:
    GaussianState(E2Params p, CovarianceParams cov, double tol) : params_(std::move(p)), cov_(std::move(cov)), tol_(tol) {
    }
    E2Params params_;
    CovarianceParams cov_;
    double tol_;
};

/// A basis-aligned split of the modes; `subset` holds 0-based mode indices of one side.
struct ModeBipartition {
    std::vector<size_t> subset;

    /// Sorted complement within n modes. Throws DomainError unless subset is a nonempty proper subset.
    std::vector<size_t> complement(size_t n) const;
    void validate(size_t n) const;
};

/// exp(-2i Im<z|m> - (x, y)^T S (x, y)) with z = x + iy.
cplx characteristic_function(const GaussianState &state, const CVec &z);

struct NumberDistribution {
    std::map<MultiIndex, double> probabilities;
    double tail = 0;
};

/// Diagonal of the truncated density matrix.
NumberDistribution number_distribution(const GaussianState &state, int cutoff);

enum class MarginalMethod {
    /// Restrict (m, S) to the kept modes, then convert.
    kCovariance,
    /// Integrate the traced modes out of the generating function.
    kGeneratingFunction,
    /// The closed form with prefactor 1/4 on the Lambda correction. Not normalized in general;
    /// kept for comparison only.
    kPrintedFormula,
};

/// Reduced state on `keep` (0-based modes). Always uses the covariance path.
GaussianState marginal(const GaussianState &state, const std::vector<size_t> &keep);

/// Raw reduced parameters by the chosen method.
E2Params marginal_params(const GaussianState &state, const std::vector<size_t> &keep, MarginalMethod method);

/// Frobenius norm of the block of A coupling the two sides of the split.
double offdiag_norm(const GaussianState &state, const ModeBipartition &split);

/// Pure states only: separable iff the coupling block of A vanishes. Mixed input throws UnsupportedError.
bool is_pure_separable(const GaussianState &state, const ModeBipartition &split);

/// Every bipartition with mode 0 on the first side, i.e. the 2^(n-1) - 1 distinct splits.
std::vector<ModeBipartition> all_bipartitions(size_t n);

/// Pure states only: entangled across every basis-aligned split.
bool is_completely_entangled_pure(const GaussianState &state);

/// Sufficient condition: every off-diagonal entry of A nonzero and ||A|| < 1/2.
bool completely_entangled_certificate(const CMat &a, double tol = kDefaultTol);

struct NormalForm {
    CVec displacement;
    CMat unitary;
    E2Params canonical;
};

/// Conjugating by W(-z) then Gamma(U) yields canonical parameters with mu = 0 and Lambda diagonal
/// (descending); pure states additionally get A diagonal.
NormalForm normal_form(const GaussianState &state);

/// Inverse of normal_form.
E2Params from_normal_form(const NormalForm &nf);

}  // namespace gausskit

#endif
