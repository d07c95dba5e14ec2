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

#ifndef _GAUSSKIT_TOMOGRAPHY_H
#define _GAUSSKIT_TOMOGRAPHY_H

#include <cstdint>
#include <string>
#include <vector>

#include "gausskit/fock.hpp"
#include "gausskit/params.hpp"

namespace gausskit {

// Mode numbers in this module are 1-based, matching the outcome labels.

enum class MeasurementKind {
    kM0,         // |Omega><Omega|
    kMj,         // |chi_j><chi_j|
    kMj0,        // (chi_j + Omega) / sqrt 2
    kMj0Prime,   // (chi_j + i Omega) / sqrt 2
    kMjk0,       // (chi_jk + Omega) / sqrt 2, j <= k
    kMjk0Prime,  // (chi_jk + i Omega) / sqrt 2
    kXjk,        // (chi_j + chi_k) / sqrt 2, j < k
    kXjkPrime,   // (chi_j + i chi_k) / sqrt 2
    kVN,         // orthogonal resolution over Omega, chi_j, chi_jk and the remainder
};

/// Superposition of particle-basis vectors with |t| <= 2.
struct ProjectorVector {
    std::vector<std::pair<MultiIndex, cplx>> terms;

    TruncatedVector to_truncated(int cutoff = 2) const;
};

struct MeasurementSpec {
    MeasurementKind kind = MeasurementKind::kM0;
    size_t n = 0;
    size_t j = 0;
    size_t k = 0;

    static MeasurementSpec parse(const std::string &name, size_t n, size_t j, size_t k);

    size_t outcome_count() const;
    std::string kind_name() const;
    /// The projected vector of a yes-no measurement; throws for VN.
    ProjectorVector vector() const;
    bool operator==(const MeasurementSpec &other) const = default;
};

/// N = (n + 1)(n + 2) / 2 + 1.
size_t vn_outcome_count(size_t n);
size_t outcome_label_vacuum();
size_t outcome_label(size_t r, size_t n);
size_t outcome_label(size_t j, size_t k, size_t n);
size_t outcome_label_remainder(size_t n);

/// Basis vector attached to each VN outcome except the remainder, indexed by label.
std::vector<MultiIndex> vn_basis(size_t n);

/// M0; Mj0, Mj0' for each mode; Mjk0, Mjk0' for j <= k; and VN.
std::vector<MeasurementSpec> standard_battery(size_t n);

/// Xjk, Xjk' for j < k. They supply the phases of <chi_j|rho|chi_k>, which no
/// standard measurement resolves.
std::vector<MeasurementSpec> exchange_supplement(size_t n);

/// standard_battery followed by exchange_supplement.
std::vector<MeasurementSpec> full_battery(size_t n);

/// Exact outcome probabilities; remainder = 1 - sum of the others. Clamped to [0, 1].
std::vector<double> outcome_probabilities(const E2Params &state, const MeasurementSpec &spec, double tol = kDefaultTol);

/// Seed for an independent stream derived from (seed, stream id).
uint64_t derive_seed(uint64_t seed, uint64_t stream);

/// k i.i.d. draws by inverse CDF; deterministic in (seed, stream).
std::vector<uint64_t> sample(const std::vector<double> &probabilities, uint64_t k, uint64_t seed, uint64_t stream = 0);

struct MeasurementRecord {
    MeasurementSpec spec;
    std::vector<uint64_t> counts;

    uint64_t shots() const;
};

/// Sample every measurement of `battery` with `shots` draws; stream id = position in the battery.
std::vector<MeasurementRecord> simulate(const E2Params &state, const std::vector<MeasurementSpec> &battery,
                                        uint64_t shots, uint64_t seed);

struct ScalarEstimate {
    std::string name;
    double value = 0;
    double std_error = 0;
};

struct EstimationReport {
    size_t n = 0;
    GeneralE2Params estimates;
    E2Params state;
    std::vector<ScalarEstimate> table;
    std::vector<MeasurementRecord> records;
};

/// Recover (c, alpha, A, Lambda) from counts by the polarization identity, with delta-method standard errors.
EstimationReport estimate(const std::vector<MeasurementRecord> &records);

/// Same estimator fed exact probabilities; standard errors are those of `shots` draws per measurement.
EstimationReport estimate_from_probabilities(const E2Params &state, const std::vector<MeasurementSpec> &battery,
                                             uint64_t shots);

/// The real parameter vector in the order of EstimationReport::table.
std::vector<double> parameter_vector(const E2Params &p);
std::vector<std::string> parameter_names(size_t n);

/// <u|rho|v> from four diagonal expectations.
cplx polarization(double p_plus, double p_imag, double p_u, double p_v);

}  // namespace gausskit

#endif
