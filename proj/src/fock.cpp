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

#include "gausskit/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

#include <Eigen/Sparse>

namespace gausskit {

namespace {

using SpMat = Eigen::SparseMatrix<cplx>;

cplx ipow(cplx base, int e) {
    cplx out = 1;
    while (e > 0) {
        if (e & 1) {
            out *= base;
        }
        base *= base;
        e >>= 1;
    }
    return out;
}

// Calls f(s) for every s <= t, in lexicographic order.
void for_each_below(const MultiIndex &t, const std::function<void(const MultiIndex &)> &f) {
    MultiIndex s = MultiIndex::zeros(t.size());
    while (true) {
        f(s);
        size_t k = 0;
        while (k < t.size() && s[k] == t[k]) {
            s[k] = 0;
            k++;
        }
        if (k == t.size()) {
            return;
        }
        s[k]++;
    }
}

void delta_rec(size_t i, size_t j, UpperTriangularCount &r, std::vector<int> &rem,
               std::vector<UpperTriangularCount> &out) {
    const size_t n = r.n;
    if (i == n) {
        out.push_back(r);
        return;
    }
    if (j == n) {
        if (rem[i] % 2 != 0) {
            return;
        }
        int saved = rem[i];
        r(i, i) = saved / 2;
        rem[i] = 0;
        delta_rec(i + 1, i + 2, r, rem, out);
        rem[i] = saved;
        r(i, i) = 0;
        return;
    }
    int top = std::min(rem[i], rem[j]);
    for (int v = 0; v <= top; v++) {
        r(i, j) = v;
        rem[i] -= v;
        rem[j] -= v;
        delta_rec(i, j + 1, r, rem, out);
        rem[i] += v;
        rem[j] += v;
    }
    r(i, j) = 0;
}

// Contingency tables with row sums k and column sums l; accumulates prod Lambda_ij^R_ij / R_ij!.
void tables_rec(const CMat &lambda, size_t i, size_t j, std::vector<int> &row_rem, std::vector<int> &col_rem,
                cplx weight, cplx &acc) {
    const size_t n = row_rem.size();
    if (i == n) {
        acc += weight;
        return;
    }
    if (j + 1 == n) {
        int v = row_rem[i];
        if (v > col_rem[j]) {
            return;
        }
        col_rem[j] -= v;
        row_rem[i] = 0;
        tables_rec(lambda, i + 1, 0, row_rem, col_rem, weight * ipow(lambda(i, j), v) / factorial(v), acc);
        row_rem[i] = v;
        col_rem[j] += v;
        return;
    }
    int top = std::min(row_rem[i], col_rem[j]);
    for (int v = 0; v <= top; v++) {
        row_rem[i] -= v;
        col_rem[j] -= v;
        tables_rec(lambda, i, j + 1, row_rem, col_rem, weight * ipow(lambda(i, j), v) / factorial(v), acc);
        row_rem[i] += v;
        col_rem[j] += v;
    }
}

// sqrt(d!) [z^d] exp(mu^T z + z^T B z) given phi_B on every e <= d.
cplx series_value(const CVec &mu, const MultiIndex &d, const std::function<cplx(const MultiIndex &)> &phi_at) {
    cplx acc = 0;
    double sqrt_d = std::sqrt(d.factorial());
    for_each_below(d, [&](const MultiIndex &k) {
        cplx mk = 1;
        for (size_t j = 0; j < k.size(); j++) {
            mk *= ipow(mu(j), k[j]);
        }
        if (mk == cplx(0)) {
            return;
        }
        MultiIndex rest = d - k;
        acc += mk / k.factorial() * phi_at(rest) / std::sqrt(rest.factorial());
    });
    return acc * sqrt_d;
}

// Nonzero entries of the lower-triangular E matrix as a sparse matrix.
SpMat e_sparse(const CVec &mu, const CMat &a, const FockBasis &basis) {
    CVec f = series_table(mu, a, basis);
    std::vector<Eigen::Triplet<cplx>> trips;
    for (size_t ti = 0; ti < basis.dim(); ti++) {
        const MultiIndex &t = basis.state(ti);
        for_each_below(t, [&](const MultiIndex &d) {
            cplx fd = f((Eigen::Index)basis.index(d));
            if (fd == cplx(0)) {
                return;
            }
            MultiIndex s = t - d;
            trips.emplace_back((int)ti, (int)basis.index(s), std::sqrt(binomial(t, s)) * fd);
        });
    }
    SpMat e((Eigen::Index)basis.dim(), (Eigen::Index)basis.dim());
    e.setFromTriplets(trips.begin(), trips.end());
    return e;
}

void parallel_for(size_t count, const std::function<void(size_t, size_t)> &body) {
    size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        body(0, count);
        return;
    }
    std::vector<std::thread> threads;
    size_t chunk = (count + workers - 1) / workers;
    for (size_t w = 0; w < workers; w++) {
        size_t lo = w * chunk;
        size_t hi = std::min(count, lo + chunk);
        if (lo < hi) {
            threads.emplace_back(body, lo, hi);
        }
    }
    for (auto &th : threads) {
        th.join();
    }
}

// E Gamma^dagger with E sparse lower-triangular and Gamma block diagonal.
CMat e_times_gamma_adjoint(const SpMat &e, const CMat &gamma, const FockBasis &basis) {
    const auto dim = (Eigen::Index)basis.dim();
    CMat y = CMat::Zero(dim, dim);
    for (int k = 0; k <= basis.cutoff(); k++) {
        auto lo = (Eigen::Index)basis.shell_begin(k);
        auto len = (Eigen::Index)(basis.shell_end(k) - basis.shell_begin(k));
        y.middleCols(lo, len) = e.middleCols(lo, len) * gamma.block(lo, lo, len, len).adjoint();
    }
    return y;
}

}  // namespace

size_t worker_count() {
    size_t hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("GAUSSKIT_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) {
            hw = std::min(hw, (size_t)cap);
        }
    }
    return hw;
}

cplx TruncatedOperator::operator()(const MultiIndex &r, const MultiIndex &s) const {
    auto i = basis->index(r);
    auto j = basis->index(s);
    if (i < 0 || j < 0) {
        throw DomainError("multi-index outside the truncated window");
    }
    return m(i, j);
}

cplx TruncatedVector::operator[](const MultiIndex &t) const {
    auto i = basis->index(t);
    if (i < 0) {
        throw DomainError("multi-index outside the truncated window");
    }
    return v(i);
}

std::shared_ptr<const FockBasis> make_basis(size_t n, int cutoff) {
    return std::make_shared<const FockBasis>(n, cutoff);
}

std::vector<UpperTriangularCount> enumerate_delta(const MultiIndex &t) {
    std::vector<UpperTriangularCount> out;
    if (t.size() == 0 || t.total() % 2 != 0) {
        return out;
    }
    UpperTriangularCount r(t.size());
    std::vector<int> rem = t.t;
    delta_rec(0, 1, r, rem, out);
    return out;
}

cplx phi(const CMat &b, const MultiIndex &t) {
    if ((size_t)b.rows() != t.size() || b.cols() != b.rows()) {
        throw ShapeError("phi: B and t have inconsistent sizes");
    }
    cplx acc = 0;
    for (const auto &r : enumerate_delta(t)) {
        cplx term = std::ldexp(1.0, r.abs() - r.trace()) / r.factorial();
        for (size_t i = 0; i < r.n; i++) {
            for (size_t j = i; j < r.n; j++) {
                if (r(i, j)) {
                    term *= ipow(b(i, j), r(i, j));
                }
            }
        }
        acc += term;
    }
    return acc * std::sqrt(t.factorial());
}

CVec phi_table(const CMat &b, const FockBasis &basis) {
    CVec out(basis.dim());
    for (size_t k = 0; k < basis.dim(); k++) {
        out((Eigen::Index)k) = phi(b, basis.state(k));
    }
    return out;
}

CVec series_table(const CVec &mu, const CMat &b, const FockBasis &basis) {
    CVec ph = phi_table(b, basis);
    if (mu.size() == 0 || mu.cwiseAbs().maxCoeff() == 0) {
        return ph;
    }
    CVec out(basis.dim());
    auto phi_at = [&](const MultiIndex &e) {
        return ph((Eigen::Index)basis.index(e));
    };
    for (size_t k = 0; k < basis.dim(); k++) {
        out((Eigen::Index)k) = series_value(mu, basis.state(k), phi_at);
    }
    return out;
}

cplx gamma_lambda_entry(const CMat &lambda, const MultiIndex &k, const MultiIndex &l) {
    if ((size_t)lambda.rows() != k.size() || k.size() != l.size() || lambda.cols() != lambda.rows()) {
        throw ShapeError("gamma_lambda_entry: inconsistent sizes");
    }
    if (k.total() != l.total()) {
        return 0;
    }
    std::vector<int> row_rem = k.t;
    std::vector<int> col_rem = l.t;
    cplx acc = 0;
    tables_rec(lambda, 0, 0, row_rem, col_rem, 1, acc);
    return acc * std::sqrt(k.factorial() * l.factorial());
}

TruncatedOperator gamma_lambda_matrix(const CMat &lambda, int cutoff) {
    auto basis = make_basis((size_t)lambda.rows(), cutoff);
    const auto dim = (Eigen::Index)basis->dim();
    const size_t n = basis->n();
    CMat g = CMat::Zero(dim, dim);
    g(0, 0) = 1;
    // Gamma(Lambda)|l> = (1/sqrt(l_j)) a^dagger(Lambda e_j) Gamma(Lambda)|l - e_j>.
    for (Eigen::Index col = 1; col < dim; col++) {
        const MultiIndex &l = basis->state((size_t)col);
        size_t j = 0;
        while (l[j] == 0) {
            j++;
        }
        auto prev = basis->lower((size_t)col, j);
        int k = l.total() - 1;
        double inv = 1 / std::sqrt((double)l[j]);
        for (size_t q = basis->shell_begin(k); q < basis->shell_end(k); q++) {
            cplx x = g((Eigen::Index)q, prev);
            if (x == cplx(0)) {
                continue;
            }
            const MultiIndex &qs = basis->state(q);
            for (size_t i = 0; i < n; i++) {
                g(basis->raise(q, i), col) += lambda((Eigen::Index)i, (Eigen::Index)j) * std::sqrt(qs[i] + 1.0) * x * inv;
            }
        }
    }
    return TruncatedOperator{basis, g};
}

TruncatedOperator e_matrix(const CVec &mu, const CMat &a, int cutoff) {
    require_symmetric(a, "A");
    auto basis = make_basis((size_t)a.rows(), cutoff);
    CVec m = mu.size() ? mu : CVec::Zero(a.rows());
    return TruncatedOperator{basis, CMat(e_sparse(m, a, *basis))};
}

TruncatedOperator e_a_matrix(const CMat &a, int cutoff) {
    return e_matrix(CVec::Zero(a.rows()), a, cutoff);
}

TruncatedOperator dmf(const CMat &a, const CMat &lambda, int cutoff, double tol) {
    require_valid_state(a, lambda, tol);
    E2Params p{c_factor(a, lambda, tol), CVec::Zero(a.rows()), a, lambda};
    return density_matrix(p, cutoff, tol);
}

TruncatedOperator density_matrix(const E2Params &p, int cutoff, double tol) {
    require_valid_state(p.a, p.lambda, tol);
    TruncatedOperator rho = general_truncate(GeneralE2Params::from_e2(p), cutoff);
    rho.m = (0.5 * (rho.m + rho.m.adjoint())).eval();
    return rho;
}

namespace {

// sum over s <= t, s' <= t' with |s| = |s'| of E(t, s) Gamma(s, s') conj(E(t', s')).
cplx element_sum(const CMat &lambda, const MultiIndex &t, const MultiIndex &tp,
                 const std::function<cplx(const MultiIndex &)> &f) {
    std::vector<std::pair<MultiIndex, cplx>> left;
    std::vector<std::pair<MultiIndex, cplx>> right;
    for_each_below(t, [&](const MultiIndex &s) {
        cplx v = std::sqrt(binomial(t, s)) * f(t - s);
        if (v != cplx(0)) {
            left.emplace_back(s, v);
        }
    });
    for_each_below(tp, [&](const MultiIndex &s) {
        cplx v = std::sqrt(binomial(tp, s)) * f(tp - s);
        if (v != cplx(0)) {
            right.emplace_back(s, std::conj(v));
        }
    });
    cplx acc = 0;
    for (const auto &[s, ls] : left) {
        for (const auto &[sp, rs] : right) {
            if (s.total() == sp.total()) {
                acc += ls * gamma_lambda_entry(lambda, s, sp) * rs;
            }
        }
    }
    return acc;
}

}  // namespace

cplx matrix_element(const CMat &a, const CMat &lambda, const MultiIndex &t, const MultiIndex &tp, double tol) {
    require_valid_state(a, lambda, tol);
    if (t.size() != (size_t)a.rows() || tp.size() != t.size()) {
        throw ShapeError("matrix_element: multi-index length does not match A");
    }
    return c_factor(a, lambda, tol) * element_sum(lambda, t, tp, [&](const MultiIndex &d) {
               return phi(a, d);
           });
}

cplx matrix_element(const E2Params &p, const MultiIndex &t, const MultiIndex &tp) {
    if (t.size() != p.n() || tp.size() != p.n()) {
        throw ShapeError("matrix_element: multi-index length does not match parameters");
    }
    auto phi_at = [&](const MultiIndex &e) {
        return phi(p.a, e);
    };
    return p.c * element_sum(p.lambda, t, tp, [&](const MultiIndex &d) {
               return series_value(p.mu, d, phi_at);
           });
}

TruncatedVector pure_state_vector(const CMat &a, int cutoff) {
    require_symmetric(a, "A");
    const auto n = a.rows();
    if (!is_valid_state(a, CMat::Zero(n, n))) {
        throw DomainError("pure_state_vector: 2A is not a strict contraction");
    }
    auto basis = make_basis((size_t)n, cutoff);
    CVec v = std::sqrt(c_factor(a, CMat::Zero(n, n))) * phi_table(a, *basis);
    return TruncatedVector{basis, v};
}

TruncatedVector pure_state_vector(const E2Params &p, int cutoff, double tol) {
    if (!is_pure(p, tol)) {
        throw UnsupportedError("pure_state_vector: state is mixed");
    }
    require_valid_state(p.a, p.lambda, tol);
    auto basis = make_basis(p.n(), cutoff);
    CVec v = std::sqrt(p.c) * series_table(p.mu, p.a, *basis);
    return TruncatedVector{basis, v};
}

TruncatedOperator z1_matrix(const E2Params &p, int cutoff) {
    auto gamma = gamma_lambda_matrix(psd_sqrt(p.lambda), cutoff);
    SpMat e = e_sparse(p.mu, p.a, *gamma.basis);
    CMat z = std::sqrt(p.c) * e_times_gamma_adjoint(e, gamma.m, *gamma.basis).adjoint();
    return TruncatedOperator{gamma.basis, z};
}

TruncatedOperator general_truncate(const GeneralE2Params &p, int cutoff) {
    const size_t n = p.n();
    auto basis = make_basis(n, cutoff);
    const size_t dim = basis->dim();
    // f(r, s) = <r|Z|s> / c obeys the Euler relation deg(m) f_m = sum_tau deg(tau) P_tau sqrt(m!/(m-tau)!) f_{m-tau}
    // over the monomials tau of the exponent P. Row r only reads rows of lower shells and earlier entries of
    // itself, so the rows of one shell are independent.
    CMat f = CMat::Zero((Eigen::Index)dim, (Eigen::Index)dim);
    auto fill_row = [&](size_t ri) {
        const MultiIndex &r = basis->state(ri);
        for (size_t si = 0; si < dim; si++) {
            if (ri == 0 && si == 0) {
                f(0, 0) = 1;
                continue;
            }
            const MultiIndex &s = basis->state(si);
            cplx acc = 0;
            for (size_t i = 0; i < n; i++) {
                if (r[i] > 0) {
                    auto ri1 = basis->lower(ri, i);
                    acc += p.alpha((Eigen::Index)i) * std::sqrt((double)r[i]) * f(ri1, (Eigen::Index)si);
                    // u_i u_j terms, j >= i.
                    for (size_t j = i; j < n; j++) {
                        int need = (j == i) ? 2 : 1;
                        if (r[j] < need) {
                            continue;
                        }
                        auto ri2 = basis->lower((size_t)ri1, j);
                        double w = (j == i) ? std::sqrt((double)r[i] * (r[i] - 1)) : std::sqrt((double)r[i] * r[j]);
                        cplx coef = (j == i) ? p.a((Eigen::Index)i, (Eigen::Index)i) : 2.0 * p.a((Eigen::Index)i, (Eigen::Index)j);
                        acc += 2.0 * coef * w * f(ri2, (Eigen::Index)si);
                    }
                    // u_i v_j terms.
                    for (size_t j = 0; j < n; j++) {
                        if (s[j] > 0) {
                            auto sj1 = basis->lower(si, j);
                            acc += 2.0 * p.lambda((Eigen::Index)i, (Eigen::Index)j) * std::sqrt((double)r[i] * s[j]) * f(ri1, sj1);
                        }
                    }
                }
                if (s[i] > 0) {
                    auto si1 = basis->lower(si, i);
                    acc += p.beta((Eigen::Index)i) * std::sqrt((double)s[i]) * f((Eigen::Index)ri, si1);
                    for (size_t j = i; j < n; j++) {
                        int need = (j == i) ? 2 : 1;
                        if (s[j] < need) {
                            continue;
                        }
                        auto si2 = basis->lower((size_t)si1, j);
                        double w = (j == i) ? std::sqrt((double)s[i] * (s[i] - 1)) : std::sqrt((double)s[i] * s[j]);
                        cplx coef = (j == i) ? p.b((Eigen::Index)i, (Eigen::Index)i) : 2.0 * p.b((Eigen::Index)i, (Eigen::Index)j);
                        acc += 2.0 * coef * w * f((Eigen::Index)ri, si2);
                    }
                }
            }
            f((Eigen::Index)ri, (Eigen::Index)si) = acc / (double)(r.total() + s.total());
        }
    };
    for (int k = 0; k <= cutoff; k++) {
        size_t first = basis->shell_begin(k);
        parallel_for(basis->shell_end(k) - first, [&](size_t lo, size_t hi) {
            for (size_t ri = first + lo; ri < first + hi; ri++) {
                fill_row(ri);
            }
        });
    }
    return TruncatedOperator{basis, p.c * f};
}

double tail_bound(const TruncatedOperator &rho) {
    const FockBasis &basis = *rho.basis;
    double deficit = std::max(0.0, 1 - rho.trace().real());
    int top = basis.cutoff();
    if (top < 1) {
        return deficit;
    }
    auto shell_weight = [&](int k) {
        double w = 0;
        for (size_t i = basis.shell_begin(k); i < basis.shell_end(k); i++) {
            w += rho.m((Eigen::Index)i, (Eigen::Index)i).real();
        }
        return w;
    };
    double last = shell_weight(top);
    double prev = shell_weight(top - 1);
    double extra = 0;
    if (prev > 0 && last > 0 && last < prev) {
        double q = last / prev;
        extra = last * q / (1 - q);
    }
    return deficit + extra;
}

}  // namespace gausskit
