// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_CALDERON_HPP
#define MORTAR_CALDERON_HPP

#include "mortar/bem_operators.hpp"

namespace mortar
{

//
// Residuals of the exterior Calderon identities for Cauchy data (g0, g1) with g0 in Z_h and
// g1 in W_h:
//   r1 = <(1/2 - K) g0 + V g1, psi_i>       (tested with W_h)
//   r2 = <W g0 + (1/2 + K') g1, phi_i>      (tested with Z_h)
// reported in the discrete L2 norm sqrt(r^H M^{-1} r) of the test space.
//
struct CalderonResidual
{
  double r1;
  double r2;
};

CalderonResidual calderon_residual(const BemOperatorSet &ops, const TraceSpaces &spaces,
                                   const CVector &g0, const CVector &g1);

// Interpolates the Dirichlet trace into Z_h and projects the Neumann trace onto W_h, then
// evaluates the residual.
CalderonResidual calderon_residual(const BemOperatorSet &ops, const TraceSpaces &spaces,
                                   const SurfaceField &dirichlet, const SurfaceField &neumann);

}  // namespace mortar

#endif  // MORTAR_CALDERON_HPP
