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

#ifndef _GAUSSKIT_SEMIGROUP_H
#define _GAUSSKIT_SEMIGROUP_H

#include "gausskit/params.hpp"

namespace gausskit {

/// Weyl (displacement) operator W(z).
GeneralE2Params weyl_params(const CVec &z);

/// Second quantization Gamma(K) of a contraction K.
GeneralE2Params second_quantization_params(const CMat &k, double tol = kDefaultTol);

/// alpha(L) = det (I + L0^T L0) / 2.
double symplectic_alpha(const SymplecticMap &l);

/// The canonically normalized unitary Gamma0(L) implementing a symplectic map.
GeneralE2Params gamma0_params(const SymplecticMap &l);

/// Parameters of the adjoint operator.
GeneralE2Params adjoint_params(const GeneralE2Params &p);

/// Parameters of the product Z1 Z2. Throws NotComposableError when the defining Gaussian
/// integral does not converge (||conj(B1) + A2|| >= 1).
GeneralE2Params compose(const GeneralE2Params &p1, const GeneralE2Params &p2);

/// Gamma(K) Z Gamma(K)^dagger.
E2Params conjugate_by_gamma(const E2Params &p, const CMat &k);

/// W(-z) Z W(z).
E2Params conjugate_by_weyl(const E2Params &p, const CVec &z);

/// Value of the generating function G_Z(u, v).
cplx generating_function(const GeneralE2Params &p, const CVec &u, const CVec &v);

}  // namespace gausskit

#endif
