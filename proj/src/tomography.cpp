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

#include "gausskit/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace gausskit {

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

void check_modes(size_t n, size_t j, size_t k, bool ordered, bool strict) {
    if (j < 1 || j > n || (ordered && (k < 1 || k > n || k < j || (strict && k == j)))) {
        throw DomainError("measurement mode indices out of range");
    }
}

cplx expectation(const E2Params &p, const ProjectorVector &zeta) {
    cplx acc = 0;
    for (const auto &[t, a] : zeta.terms) {
        for (const auto &[tp, b] : zeta.terms) {
            acc += std::conj(a) * b * matrix_element(p, t, tp);
        }
    }
    return acc;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

TruncatedVector ProjectorVector::to_truncated(int cutoff) const {
    if (terms.empty()) {
        throw DomainError("empty projector vector");
    }
    auto basis = make_basis(terms.front().first.size(), cutoff);
    CVec v = CVec::Zero((Eigen::Index)basis->dim());
    for (const auto &[t, a] : terms) {
        auto idx = basis->index(t);
        if (idx < 0) {
            throw DomainError("projector vector exceeds the cutoff");
        }
        v(idx) += a;
    }
    return TruncatedVector{basis, v};
}

MeasurementSpec MeasurementSpec::parse(const std::string &name, size_t n, size_t j, size_t k) {
    static const std::pair<const char *, MeasurementKind> kinds[] = {
        {"M0", MeasurementKind::kM0},          {"Mj", MeasurementKind::kMj},
        {"Mj0", MeasurementKind::kMj0},        {"Mj0'", MeasurementKind::kMj0Prime},
        {"Mjk0", MeasurementKind::kMjk0},      {"Mjk0'", MeasurementKind::kMjk0Prime},
        {"Xjk", MeasurementKind::kXjk},        {"Xjk'", MeasurementKind::kXjkPrime},
        {"VN", MeasurementKind::kVN},
    };
    for (const auto &[label, kind] : kinds) {
        if (name == label) {
            MeasurementSpec s{kind, n, j, k};
            switch (kind) {
                case MeasurementKind::kM0:
                case MeasurementKind::kVN:
                    s.j = s.k = 0;
                    break;
                case MeasurementKind::kMj:
                case MeasurementKind::kMj0:
                case MeasurementKind::kMj0Prime:
                    check_modes(n, j, 0, false, false);
                    s.k = 0;
                    break;
                case MeasurementKind::kMjk0:
                case MeasurementKind::kMjk0Prime:
                    check_modes(n, j, k, true, false);
                    break;
                case MeasurementKind::kXjk:
                case MeasurementKind::kXjkPrime:
                    check_modes(n, j, k, true, true);
                    break;
            }
            return s;
        }
    }
    throw DomainError("unknown measurement kind '" + name + "'");
}

std::string MeasurementSpec::kind_name() const {
    switch (kind) {
        case MeasurementKind::kM0:
            return "M0";
        case MeasurementKind::kMj:
            return "Mj";
        case MeasurementKind::kMj0:
            return "Mj0";
        case MeasurementKind::kMj0Prime:
            return "Mj0'";
        case MeasurementKind::kMjk0:
            return "Mjk0";
        case MeasurementKind::kMjk0Prime:
            return "Mjk0'";
        case MeasurementKind::kXjk:
            return "Xjk";
        case MeasurementKind::kXjkPrime:
            return "Xjk'";
        case MeasurementKind::kVN:
            return "VN";
    }
    return "?";
}

size_t MeasurementSpec::outcome_count() const {
    return kind == MeasurementKind::kVN ? vn_outcome_count(n) : 2;
}

ProjectorVector MeasurementSpec::vector() const {
    MultiIndex omega = MultiIndex::zeros(n);
    const cplx i(0, 1);
    switch (kind) {
        case MeasurementKind::kM0:
            return {{{omega, 1}}};
        case MeasurementKind::kMj:
            return {{{MultiIndex::unit(n, j - 1), 1}}};
        case MeasurementKind::kMj0:
            return {{{MultiIndex::unit(n, j - 1), kInvSqrt2}, {omega, kInvSqrt2}}};
        case MeasurementKind::kMj0Prime:
            return {{{MultiIndex::unit(n, j - 1), kInvSqrt2}, {omega, i * kInvSqrt2}}};
        case MeasurementKind::kMjk0:
            return {{{MultiIndex::pair(n, j - 1, k - 1), kInvSqrt2}, {omega, kInvSqrt2}}};
        case MeasurementKind::kMjk0Prime:
            return {{{MultiIndex::pair(n, j - 1, k - 1), kInvSqrt2}, {omega, i * kInvSqrt2}}};
        case MeasurementKind::kXjk:
            return {{{MultiIndex::unit(n, j - 1), kInvSqrt2}, {MultiIndex::unit(n, k - 1), kInvSqrt2}}};
        case MeasurementKind::kXjkPrime:
            return {{{MultiIndex::unit(n, j - 1), kInvSqrt2}, {MultiIndex::unit(n, k - 1), i * kInvSqrt2}}};
        case MeasurementKind::kVN:
            break;
    }
    throw DomainError("the VN measurement has no single projector vector");
}

size_t vn_outcome_count(size_t n) {
    return (n + 1) * (n + 2) / 2 + 1;
}

size_t outcome_label_vacuum() {
    return 0;
}

size_t outcome_label(size_t r, size_t n) {
    check_modes(n, r, 0, false, false);
    return r;
}

size_t outcome_label(size_t j, size_t k, size_t n) {
    check_modes(n, j, k, true, false);
    return n + (2 * n - j) * (j - 1) / 2 + k;
}

size_t outcome_label_remainder(size_t n) {
    return vn_outcome_count(n) - 1;
}

std::vector<MultiIndex> vn_basis(size_t n) {
    std::vector<MultiIndex> out(vn_outcome_count(n) - 1);
    out[0] = MultiIndex::zeros(n);
    for (size_t r = 1; r <= n; r++) {
        out[outcome_label(r, n)] = MultiIndex::unit(n, r - 1);
    }
    for (size_t j = 1; j <= n; j++) {
        for (size_t k = j; k <= n; k++) {
            out[outcome_label(j, k, n)] = MultiIndex::pair(n, j - 1, k - 1);
        }
    }
    return out;
}

std::vector<MeasurementSpec> standard_battery(size_t n) {
    std::vector<MeasurementSpec> out;
    out.push_back({MeasurementKind::kM0, n, 0, 0});
    for (size_t j = 1; j <= n; j++) {
        out.push_back({MeasurementKind::kMj0, n, j, 0});
        out.push_back({MeasurementKind::kMj0Prime, n, j, 0});
    }
    for (size_t j = 1; j <= n; j++) {
        for (size_t k = j; k <= n; k++) {
            out.push_back({MeasurementKind::kMjk0, n, j, k});
            out.push_back({MeasurementKind::kMjk0Prime, n, j, k});
        }
    }
    out.push_back({MeasurementKind::kVN, n, 0, 0});
    return out;
}

std::vector<MeasurementSpec> exchange_supplement(size_t n) {
    std::vector<MeasurementSpec> out;
    for (size_t j = 1; j <= n; j++) {
        for (size_t k = j + 1; k <= n; k++) {
            out.push_back({MeasurementKind::kXjk, n, j, k});
            out.push_back({MeasurementKind::kXjkPrime, n, j, k});
        }
    }
    return out;
}

std::vector<MeasurementSpec> full_battery(size_t n) {
    auto out = standard_battery(n);
    auto extra = exchange_supplement(n);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

std::vector<double> outcome_probabilities(const E2Params &state, const MeasurementSpec &spec, double tol) {
    if (spec.n != state.n()) {
        throw ShapeError("measurement and state have different mode counts");
    }
    std::vector<double> raw;
    if (spec.kind == MeasurementKind::kVN) {
        for (const auto &t : vn_basis(state.n())) {
            raw.push_back(matrix_element(state, t, t).real());
        }
    } else {
        raw.push_back(expectation(state, spec.vector()).real());
    }
    double rest = 1;
    for (double p : raw) {
        rest -= p;
    }
    raw.push_back(rest);
    for (double &p : raw) {
        if (p < -tol || p > 1 + tol) {
            throw Error("outcome probability outside [0, 1]: " + std::to_string(p));
        }
        p = std::clamp(p, 0.0, 1.0);
    }
    return raw;
}

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

std::vector<uint64_t> sample(const std::vector<double> &probabilities, uint64_t k, uint64_t seed, uint64_t stream) {
    if (probabilities.empty()) {
        throw DomainError("empty distribution");
    }
    double total = 0;
    for (double p : probabilities) {
        if (!(p >= 0)) {
            throw DomainError("negative probability");
        }
        total += p;
    }
    if (std::abs(total - 1) > 1e-9) {
        throw DomainError("probabilities do not sum to one");
    }
    std::vector<double> cdf(probabilities.size());
    double run = 0;
    for (size_t i = 0; i < probabilities.size(); i++) {
        run += probabilities[i];
        cdf[i] = run;
    }
    cdf.back() = INFINITY;
    std::mt19937_64 rng(derive_seed(seed, stream));
    std::vector<uint64_t> counts(probabilities.size(), 0);
    for (uint64_t draw = 0; draw < k; draw++) {
        double u = (double)(rng() >> 11) * 0x1.0p-53;
        size_t idx = (size_t)(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        counts[idx]++;
    }
    return counts;
}

uint64_t MeasurementRecord::shots() const {
    uint64_t s = 0;
    for (auto c : counts) {
        s += c;
    }
    return s;
}

std::vector<MeasurementRecord> simulate(const E2Params &state, const std::vector<MeasurementSpec> &battery,
                                        uint64_t shots, uint64_t seed) {
    std::vector<MeasurementRecord> out;
    for (size_t s = 0; s < battery.size(); s++) {
        out.push_back({battery[s], sample(outcome_probabilities(state, battery[s]), shots, seed, s)});
    }
    return out;
}

cplx polarization(double p_plus, double p_imag, double p_u, double p_v) {
    return cplx(p_plus, -p_imag) - cplx(0.5, -0.5) * (p_u + p_v);
}

std::vector<std::string> parameter_names(size_t n) {
    std::vector<std::string> out{"c"};
    auto s = [](size_t v) {
        return std::to_string(v);
    };
    for (size_t j = 1; j <= n; j++) {
        out.push_back("Re mu[" + s(j) + "]");
        out.push_back("Im mu[" + s(j) + "]");
    }
    for (size_t j = 1; j <= n; j++) {
        for (size_t k = j; k <= n; k++) {
            out.push_back("Re A[" + s(j) + "," + s(k) + "]");
            out.push_back("Im A[" + s(j) + "," + s(k) + "]");
        }
    }
    for (size_t j = 1; j <= n; j++) {
        out.push_back("Lambda[" + s(j) + "," + s(j) + "]");
    }
    for (size_t j = 1; j <= n; j++) {
        for (size_t k = j + 1; k <= n; k++) {
            out.push_back("Re Lambda[" + s(j) + "," + s(k) + "]");
            out.push_back("Im Lambda[" + s(j) + "," + s(k) + "]");
        }
    }
    return out;
}

std::vector<double> parameter_vector(const E2Params &p) {
    const auto n = (Eigen::Index)p.n();
    std::vector<double> out{p.c};
    for (Eigen::Index j = 0; j < n; j++) {
        out.push_back(p.mu(j).real());
        out.push_back(p.mu(j).imag());
    }
    for (Eigen::Index j = 0; j < n; j++) {
        for (Eigen::Index k = j; k < n; k++) {
            out.push_back(p.a(j, k).real());
            out.push_back(p.a(j, k).imag());
        }
    }
    for (Eigen::Index j = 0; j < n; j++) {
        out.push_back(p.lambda(j, j).real());
    }
    for (Eigen::Index j = 0; j < n; j++) {
        for (Eigen::Index k = j + 1; k < n; k++) {
            out.push_back(p.lambda(j, k).real());
            out.push_back(p.lambda(j, k).imag());
        }
    }
    return out;
}

namespace {

struct Layout {
    size_t n = 0;
    std::vector<MeasurementSpec> specs;
    std::vector<size_t> offset;  // start of each measurement's outcomes in the flat frequency vector
    size_t total = 0;

    size_t find(MeasurementKind kind, size_t j, size_t k) const {
        for (size_t s = 0; s < specs.size(); s++) {
            if (specs[s].kind == kind && specs[s].j == j && specs[s].k == k) {
                return s;
            }
        }
        throw DomainError("estimate: missing counts for " + MeasurementSpec{kind, n, j, k}.kind_name() + " (" +
                          std::to_string(j) + "," + std::to_string(k) + ")");
    }
};

// Yes-probability of a two-outcome measurement, or the VN outcome `label`.
struct Lookup {
    const Layout &layout;
    const std::vector<double> &f;

    double yes(MeasurementKind kind, size_t j, size_t k) const {
        return f[layout.offset[layout.find(kind, j, k)]];
    }
    double vn(size_t label) const {
        return f[layout.offset[layout.find(MeasurementKind::kVN, 0, 0)] + label];
    }
};

E2Params solve_parameters(const Layout &layout, const std::vector<double> &f) {
    const size_t n = layout.n;
    Lookup look{layout, f};
    using K = MeasurementKind;
    AmplitudeData amp;
    double c = look.yes(K::kM0, 0, 0);
    amp.vac = c;
    amp.lam_z = CVec(n);
    amp.a_z = CMat(n, n);
    amp.lambda_z = CMat(n, n);
    for (size_t j = 1; j <= n; j++) {
        double pj = look.vn(outcome_label(j, n));
        amp.lam_z((Eigen::Index)j - 1) = polarization(look.yes(K::kMj0, j, 0), look.yes(K::kMj0Prime, j, 0), pj, c);
        amp.lambda_z((Eigen::Index)j - 1, (Eigen::Index)j - 1) = pj;
    }
    for (size_t j = 1; j <= n; j++) {
        for (size_t k = j; k <= n; k++) {
            double pjk = look.vn(outcome_label(j, k, n));
            cplx q = polarization(look.yes(K::kMjk0, j, k), look.yes(K::kMjk0Prime, j, k), pjk, c);
            cplx entry = (j == k) ? q * kInvSqrt2 : 0.5 * q;
            amp.a_z((Eigen::Index)j - 1, (Eigen::Index)k - 1) = entry;
            amp.a_z((Eigen::Index)k - 1, (Eigen::Index)j - 1) = entry;
        }
    }
    for (size_t j = 1; j <= n; j++) {
        for (size_t k = j + 1; k <= n; k++) {
            cplx x = polarization(look.yes(K::kXjk, j, k), look.yes(K::kXjkPrime, j, k), look.vn(outcome_label(j, n)),
                                  look.vn(outcome_label(k, n)));
            amp.lambda_z((Eigen::Index)j - 1, (Eigen::Index)k - 1) = x;
            amp.lambda_z((Eigen::Index)k - 1, (Eigen::Index)j - 1) = std::conj(x);
        }
    }
    amp.mu_z = amp.lam_z.conjugate();
    amp.b_z = amp.a_z.conjugate();
    GeneralE2Params g = e2_from_amplitudes(amp);
    E2Params p{c, g.alpha, g.a, g.lambda};
    p.lambda = 0.5 * (p.lambda + p.lambda.adjoint()).eval();
    return p;
}

EstimationReport estimate_core(const std::vector<MeasurementSpec> &specs, const std::vector<std::vector<double>> &freqs,
                               const std::vector<double> &shots) {
    if (specs.empty()) {
        throw DomainError("estimate: no measurements");
    }
    Layout layout;
    layout.n = specs.front().n;
    layout.specs = specs;
    std::vector<double> flat;
    for (size_t s = 0; s < specs.size(); s++) {
        if (specs[s].n != layout.n || freqs[s].size() != specs[s].outcome_count()) {
            throw ShapeError("estimate: inconsistent measurement record");
        }
        layout.offset.push_back(flat.size());
        flat.insert(flat.end(), freqs[s].begin(), freqs[s].end());
    }
    layout.total = flat.size();

    size_t m0 = layout.find(MeasurementKind::kM0, 0, 0);
    double c_hat = flat[layout.offset[m0]];
    double se_c = std::sqrt(c_hat * (1 - c_hat) / shots[m0]);
    if (c_hat <= 10 * se_c) {
        throw IllConditionedError("estimate: vacuum overlap is not resolved above noise");
    }

    E2Params p = solve_parameters(layout, flat);
    std::vector<double> center = parameter_vector(p);
    const size_t dim = center.size();

    // Delta method: J Sigma J^T with multinomial covariance per measurement.
    const double h = 1e-6;
    RMat jac(dim, layout.total);
    for (size_t v = 0; v < layout.total; v++) {
        std::vector<double> up = flat, down = flat;
        up[v] += h;
        down[v] -= h;
        auto pu = parameter_vector(solve_parameters(layout, up));
        auto pd = parameter_vector(solve_parameters(layout, down));
        for (size_t r = 0; r < dim; r++) {
            jac((Eigen::Index)r, (Eigen::Index)v) = (pu[r] - pd[r]) / (2 * h);
        }
    }
    RMat sigma = RMat::Zero(layout.total, layout.total);
    for (size_t s = 0; s < specs.size(); s++) {
        size_t o = layout.offset[s];
        size_t cnt = freqs[s].size();
        for (size_t a = 0; a < cnt; a++) {
            for (size_t b = 0; b < cnt; b++) {
                double pa = freqs[s][a], pb = freqs[s][b];
                sigma((Eigen::Index)(o + a), (Eigen::Index)(o + b)) = ((a == b ? pa : 0) - pa * pb) / shots[s];
            }
        }
    }
    RMat cov = jac * sigma * jac.transpose();

    EstimationReport report;
    report.n = layout.n;
    report.state = p;
    report.estimates = GeneralE2Params::from_e2(p);
    auto names = parameter_names(layout.n);
    for (size_t r = 0; r < dim; r++) {
        report.table.push_back({names[r], center[r], std::sqrt(std::max(0.0, cov((Eigen::Index)r, (Eigen::Index)r)))});
    }
    return report;
}

}  // namespace

EstimationReport estimate(const std::vector<MeasurementRecord> &records) {
    std::vector<MeasurementSpec> specs;
    std::vector<std::vector<double>> freqs;
    std::vector<double> shots;
    for (const auto &rec : records) {
        uint64_t k = rec.shots();
        if (k == 0) {
            throw DomainError("estimate: measurement with zero shots");
        }
        specs.push_back(rec.spec);
        std::vector<double> f;
        for (auto c : rec.counts) {
            f.push_back((double)c / (double)k);
        }
        freqs.push_back(f);
        shots.push_back((double)k);
    }
    EstimationReport report = estimate_core(specs, freqs, shots);
    report.records = records;
    return report;
}

EstimationReport estimate_from_probabilities(const E2Params &state, const std::vector<MeasurementSpec> &battery,
                                             uint64_t shots) {
    std::vector<std::vector<double>> freqs;
    for (const auto &spec : battery) {
        freqs.push_back(outcome_probabilities(state, spec));
    }
    return estimate_core(battery, freqs, std::vector<double>(battery.size(), (double)shots));
}

}  // namespace gausskit
