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

#include "gausskit/semigroup.hpp"

#include <cmath>

namespace gausskit {

namespace {

void require_general_shapes(const GeneralE2Params &p) {
    const auto n = (Eigen::Index)p.n();
    if (p.beta.size() != n || p.a.rows() != n || p.a.cols() != n || p.b.rows() != n || p.b.cols() != n ||
        p.lambda.rows() != n || p.lambda.cols() != n) {
        throw ShapeError("inconsistent 6-tuple dimensions");
    }
}

// [I, s*iI] as an n x 2n matrix.
CMat row_block(size_t n, double s) {
    CMat out(n, 2 * n);
    out << CMat::Identity(n, n), cplx(0, s) * CMat::Identity(n, n);
    return out;
}

}  // namespace

GeneralE2Params weyl_params(const CVec &z) {
    const auto n = (size_t)z.size();
    GeneralE2Params p = GeneralE2Params::identity(n);
    p.c = std::exp(-0.5 * z.squaredNorm());
    p.alpha = z;
    p.beta = -z.conjugate();
    return p;
}

GeneralE2Params second_quantization_params(const CMat &k, double tol) {
    if (k.rows() != k.cols()) {
        throw ShapeError("K must be square");
    }
    if (spectral_norm(k) > 1 + tol) {
        throw DomainError("K is not a contraction");
    }
    GeneralE2Params p = GeneralE2Params::identity((size_t)k.rows());
    p.lambda = k;
    return p;
}

double symplectic_alpha(const SymplecticMap &l) {
    const auto m = l.l0().rows();
    return (0.5 * (RMat::Identity(m, m) + l.l0().transpose() * l.l0())).determinant();
}

GeneralE2Params gamma0_params(const SymplecticMap &l) {
    const auto n = l.n();
    const RMat &l0 = l.l0();
    RMat id = RMat::Identity(2 * n, 2 * n);
    RMat l0_inv = l0.inverse();
    CMat up = row_block(n, 1);
    CMat down = row_block(n, -1);

    GeneralE2Params p;
    p.c = std::pow(symplectic_alpha(l), -0.25);
    p.alpha = CVec::Zero(n);
    p.beta = CVec::Zero(n);
    RMat ka = (id + l0_inv.transpose() * l0_inv).inverse();
    RMat kl = (l0_inv + l0.transpose()).inverse();
    RMat kb = (id + l0.transpose() * l0).inverse();
    p.a = 0.5 * up * ka.cast<cplx>() * up.transpose();
    p.lambda = up * kl.cast<cplx>() * down.transpose();
    p.b = 0.5 * down * kb.cast<cplx>() * down.transpose();
    p.a = 0.5 * (p.a + p.a.transpose()).eval();
    p.b = 0.5 * (p.b + p.b.transpose()).eval();
    return p;
}

GeneralE2Params adjoint_params(const GeneralE2Params &p) {
    require_general_shapes(p);
    return GeneralE2Params{std::conj(p.c), p.beta.conjugate(), p.alpha.conjugate(), p.b.conjugate(), p.lambda.adjoint(),
                           p.a.conjugate()};
}

GeneralE2Params compose(const GeneralE2Params &p1, const GeneralE2Params &p2) {
    require_general_shapes(p1);
    require_general_shapes(p2);
    if (p1.n() != p2.n()) {
        throw ShapeError("compose: mode counts differ");
    }
    const auto n = p1.n();
    // G(u, v) = pi^-n  int G1(u, z) G2(conj z, v) exp(-|z|^2) dz. In w = (x, y) with z = x + iy, the
    // z-dependent exponent is -w^T R w + l^T w with l = T (p; q), p = beta1 + Lambda1^T u the coefficient of z
    // and q = alpha2 + Lambda2 v the coefficient of conj z.
    CMat d = p1.b - p2.a;
    CMat s = p1.b + p2.a;
    CMat id = CMat::Identity(n, n);
    CMat r(2 * n, 2 * n);
    r << id - s, cplx(0, -1) * d, cplx(0, -1) * d, id + s;

    // Re R = I - realification of z -> (conj(B1) + A2) conj(z); positive iff that map is a strict contraction.
    RMat re_r = 0.5 * (r.real() + r.real().transpose());
    if (!is_positive_definite(re_r, 1e-12)) {
        throw NotComposableError("compose: Gaussian integral does not converge (||conj(B1) + A2|| >= 1)");
    }

    CMat t(2 * n, 2 * n);
    t << id, id, cplx(0, 1) * id, cplx(0, -1) * id;
    // The integral equals det(R)^(-1/2) exp((p; q)^T G (p; q)) with G = T^T R^-1 T / 4.
    CMat g = 0.25 * t.transpose() * r.partialPivLu().solve(t);
    g = 0.5 * (g + g.transpose()).eval();
    CMat g_pp = g.topLeftCorner(n, n);
    CMat g_pq = g.topRightCorner(n, n);
    CMat g_qq = g.bottomRightCorner(n, n);

    // det(R)^(-1/2) with the branch fixed by the eigenvalues of R (right half-plane).
    Eigen::ComplexEigenSolver<CMat> es(r, false);
    cplx inv_sqrt_det = 1;
    for (Eigen::Index k = 0; k < r.rows(); k++) {
        inv_sqrt_det *= std::sqrt(cplx(1) / es.eigenvalues()(k));
    }

    const CVec &b1 = p1.beta;
    const CVec &a2 = p2.alpha;
    cplx k0 = (b1.transpose() * g_pp * b1)(0, 0) + 2.0 * (b1.transpose() * g_pq * a2)(0, 0) +
              (a2.transpose() * g_qq * a2)(0, 0);

    GeneralE2Params out;
    out.c = p1.c * p2.c * inv_sqrt_det * std::exp(k0);
    out.alpha = p1.alpha + 2.0 * p1.lambda * (g_pp * b1 + g_pq * a2);
    out.beta = p2.beta + 2.0 * p2.lambda.transpose() * (g_qq * a2 + g_pq.transpose() * b1);
    out.a = p1.a + p1.lambda * g_pp * p1.lambda.transpose();
    out.b = p2.b + p2.lambda.transpose() * g_qq * p2.lambda;
    out.lambda = 2.0 * p1.lambda * g_pq * p2.lambda;
    out.a = 0.5 * (out.a + out.a.transpose()).eval();
    out.b = 0.5 * (out.b + out.b.transpose()).eval();
    return out;
}

E2Params conjugate_by_gamma(const E2Params &p, const CMat &k) {
    if (k.rows() != k.cols() || k.rows() != (Eigen::Index)p.n()) {
        throw ShapeError("conjugate_by_gamma: K has the wrong size");
    }
    E2Params out{p.c, k * p.mu, k * p.a * k.transpose(), k * p.lambda * k.adjoint()};
    out.a = 0.5 * (out.a + out.a.transpose()).eval();
    out.lambda = 0.5 * (out.lambda + out.lambda.adjoint()).eval();
    return out;
}

E2Params conjugate_by_weyl(const E2Params &p, const CVec &z) {
    if (z.size() != (Eigen::Index)p.n()) {
        throw ShapeError("conjugate_by_weyl: z has the wrong size");
    }
    // c' = <psi(z)|Z|psi(z)> = exp(-|z|^2) G_Z(conj z, z).
    double c = std::real(std::exp(-z.squaredNorm()) * generating_function(GeneralE2Params::from_e2(p), z.conjugate(), z));
    RVec shift = build_M(p.a, p.lambda) * realify(z);
    return E2Params{c, p.mu - complexify(shift), p.a, p.lambda};
}

cplx generating_function(const GeneralE2Params &p, const CVec &u, const CVec &v) {
    require_general_shapes(p);
    cplx e = (u.transpose() * p.alpha)(0, 0) + (p.beta.transpose() * v)(0, 0) + (u.transpose() * p.a * u)(0, 0) +
             (u.transpose() * p.lambda * v)(0, 0) + (v.transpose() * p.b * v)(0, 0);
    return p.c * std::exp(e);
}

}  // namespace gausskit
