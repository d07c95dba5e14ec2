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

#include "oracles/oracles.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <map>
#include <numbers>

namespace gausskit::oracles {

namespace {

using Poly = std::map<std::vector<int>, cplx>;
using Gauss = boost::math::quadrature::gauss<double, 30>;

int degree(const std::vector<int> &e) {
    int d = 0;
    for (int v : e) {
        d += v;
    }
    return d;
}

Poly multiply(const Poly &p, const Poly &q, int cap) {
    Poly out;
    for (const auto &[ep, cp] : p) {
        for (const auto &[eq, cq] : q) {
            std::vector<int> e(ep.size());
            for (size_t i = 0; i < e.size(); i++) {
                e[i] = ep[i] + eq[i];
            }
            if (degree(e) <= cap) {
                out[e] += cp * cq;
            }
        }
    }
    return out;
}

// Composite Gauss-Legendre over [lo, hi].
template <class F>
cplx integrate(F f, double lo, double hi, int panels) {
    cplx acc = 0;
    double h = (hi - lo) / panels;
    for (int k = 0; k < panels; k++) {
        double a = lo + k * h;
        acc += Gauss::integrate([&](double x) { return f(x).real(); }, a, a + h);
        acc += cplx(0, 1) * Gauss::integrate([&](double x) { return f(x).imag(); }, a, a + h);
    }
    return acc;
}

}  // namespace

std::map<std::vector<int>, cplx> series_expansion(const CMat &b, const CVec &mu, int degree_cap) {
    const size_t n = (size_t)b.rows();
    Poly p;
    for (size_t i = 0; i < n; i++) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        if (mu.size() && mu((Eigen::Index)i) != cplx(0)) {
            p[e] += mu((Eigen::Index)i);
        }
        for (size_t j = 0; j < n; j++) {
            std::vector<int> f(n, 0);
            f[i] += 1;
            f[j] += 1;
            p[f] += b((Eigen::Index)i, (Eigen::Index)j);
        }
    }
    // exp(p) = sum_k p^k / k!; p has no constant term, so p^k vanishes above the cap.
    Poly term{{std::vector<int>(n, 0), 1}};
    Poly total = term;
    for (int k = 1; k <= degree_cap; k++) {
        term = multiply(term, p, degree_cap);
        for (auto &[e, c] : term) {
            c /= k;
            total[e] += c;
        }
    }
    return total;
}

cplx series_coefficient(const CMat &b, const CVec &mu, const MultiIndex &t, int degree_cap) {
    if ((size_t)b.rows() != t.size()) {
        throw ShapeError("series_coefficient: B and t have inconsistent sizes");
    }
    if (t.total() > degree_cap) {
        throw DomainError("series_coefficient: |t| exceeds the degree cap");
    }
    auto total = series_expansion(b, mu, t.total());
    auto it = total.find(t.t);
    return it == total.end() ? cplx(0) : it->second * std::sqrt(t.factorial());
}

cplx general_entry(const GeneralE2Params &p, const MultiIndex &r, const MultiIndex &s) {
    const auto n = (Eigen::Index)p.n();
    CMat b(2 * n, 2 * n);
    b << p.a, 0.5 * p.lambda, 0.5 * p.lambda.transpose(), p.b;
    CVec mu(2 * n);
    mu << p.alpha, p.beta;
    std::vector<int> joined = r.t;
    joined.insert(joined.end(), s.t.begin(), s.t.end());
    MultiIndex rs(joined);
    return p.c * series_coefficient(b, mu, rs, rs.total());
}

cplx quadrature_gaussian(const CMat &a, const CVec &m) {
    const auto n = a.rows();
    if (n < 1 || n > 2 || a.cols() != n || m.size() != n) {
        throw ShapeError("quadrature_gaussian: only 1 x 1 and 2 x 2 inputs");
    }
    RMat re = a.real();
    Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (re + re.transpose()));
    double lam = es.eigenvalues().minCoeff();
    if (!(lam > 0)) {
        throw DomainError("quadrature_gaussian: integrand does not decay (Re A not positive definite)");
    }
    // Centre on the peak of |integrand| and cover exp(-70) of it.
    RVec centre = 0.5 * re.ldlt().solve(m.real());
    double half = std::sqrt(70.0 / lam);
    const int panels = 80;
    if (n == 1) {
        return integrate(
            [&](double x) {
                return std::exp(-a(0, 0) * x * x + m(0) * x);
            },
            centre(0) - half, centre(0) + half, panels);
    }
    return integrate(
        [&](double x) {
            return integrate(
                [&](double y) {
                    cplx q = a(0, 0) * x * x + 2.0 * a(0, 1) * x * y + a(1, 1) * y * y;
                    return std::exp(-q + m(0) * x + m(1) * y);
                },
                centre(1) - half, centre(1) + half, panels);
        },
        centre(0) - half, centre(0) + half, panels);
}

cplx compose_by_quadrature(const GeneralE2Params &p1, const GeneralE2Params &p2, cplx u, cplx v, double half_width) {
    if (p1.n() != 1 || p2.n() != 1) {
        throw ShapeError("compose_by_quadrature: one mode only");
    }
    auto g = [](const GeneralE2Params &p, cplx x, cplx y) {
        return p.c * std::exp(x * p.alpha(0) + p.beta(0) * y + p.a(0, 0) * x * x + p.lambda(0, 0) * x * y +
                              p.b(0, 0) * y * y);
    };
    const int panels = 60;
    cplx value = integrate(
        [&](double x) {
            return integrate(
                [&](double y) {
                    cplx z(x, y);
                    return g(p1, u, z) * g(p2, std::conj(z), v) * std::exp(-std::norm(z));
                },
                -half_width, half_width, panels);
        },
        -half_width, half_width, panels);
    return value / std::numbers::pi;
}

CMat annihilation(const FockBasis &basis, size_t mode) {
    CMat out = CMat::Zero((Eigen::Index)basis.dim(), (Eigen::Index)basis.dim());
    for (size_t i = 0; i < basis.dim(); i++) {
        const MultiIndex &t = basis.state(i);
        if (t[mode] > 0) {
            MultiIndex lower = t;
            lower[mode] -= 1;
            out(basis.index(lower), (Eigen::Index)i) = std::sqrt((double)t[mode]);
        }
    }
    return out;
}

TruncatedOperator truncated_exp_annihilation(const CMat &b, int cutoff) {
    const size_t n = (size_t)b.rows();
    auto basis = make_basis(n, cutoff);
    const auto dim = (Eigen::Index)basis->dim();
    std::vector<CMat> a;
    for (size_t j = 0; j < n; j++) {
        a.push_back(annihilation(*basis, j));
    }
    CMat q = CMat::Zero(dim, dim);
    for (size_t r = 0; r < n; r++) {
        for (size_t s = 0; s < n; s++) {
            q += b((Eigen::Index)r, (Eigen::Index)s) * a[r] * a[s];
        }
    }
    CMat term = CMat::Identity(dim, dim);
    CMat total = term;
    for (int k = 1; 2 * k <= cutoff; k++) {
        term = (q * term / (double)k).eval();
        total += term;
    }
    return TruncatedOperator{basis, total};
}

TruncatedOperator partial_trace(const TruncatedOperator &op, const std::vector<size_t> &keep) {
    const FockBasis &in = *op.basis;
    auto out_basis = make_basis(keep.size(), in.cutoff());
    std::vector<size_t> traced;
    for (size_t m = 0; m < in.n(); m++) {
        if (std::find(keep.begin(), keep.end(), m) == keep.end()) {
            traced.push_back(m);
        }
    }
    // Group window states by their traced occupations.
    std::map<std::vector<int>, std::vector<std::pair<size_t, size_t>>> groups;
    for (size_t i = 0; i < in.dim(); i++) {
        const MultiIndex &t = in.state(i);
        std::vector<int> kept, rest;
        for (size_t m : keep) {
            kept.push_back(t[m]);
        }
        for (size_t m : traced) {
            rest.push_back(t[m]);
        }
        groups[rest].emplace_back(i, (size_t)out_basis->index(MultiIndex(kept)));
    }
    CMat out = CMat::Zero((Eigen::Index)out_basis->dim(), (Eigen::Index)out_basis->dim());
    for (const auto &[rest, members] : groups) {
        for (const auto &[i, oi] : members) {
            for (const auto &[j, oj] : members) {
                out((Eigen::Index)oi, (Eigen::Index)oj) += op.m((Eigen::Index)i, (Eigen::Index)j);
            }
        }
    }
    return TruncatedOperator{out_basis, out};
}

cplx kb_resolution_check(const CVec &v, const CVec &w, double radius, int radial_panels) {
    const auto dim = std::max(v.size(), w.size());
    // A uniform angular grid with more than 2 dim points integrates e^{i k theta} exactly for |k| < 2 dim.
    const int angular = 2 * (int)dim + 2;
    auto overlap = [](const CVec &x, cplx z) {
        // <x|psi(z)> up to the factor exp(-|z|^2 / 2).
        cplx acc = 0, power = 1;
        for (Eigen::Index k = 0; k < x.size(); k++) {
            acc += std::conj(x(k)) * power / std::sqrt(factorial((int)k));
            power *= z;
        }
        return acc;
    };
    auto radial = [&](double r) {
        cplx acc = 0;
        for (int q = 0; q < angular; q++) {
            cplx z = std::polar(r, 2 * std::numbers::pi * q / angular);
            acc += overlap(v, z) * std::conj(overlap(w, z));
        }
        return acc * (2 * std::numbers::pi / angular) * r * std::exp(-r * r);
    };
    return integrate(radial, 0, radius, radial_panels) / std::numbers::pi;
}

}  // namespace gausskit::oracles
