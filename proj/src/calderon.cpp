// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/calderon.hpp"

#include <Eigen/SparseCholesky>

namespace mortar
{

namespace
{

double dual_norm(const RSparse &M, const CVector &r)
{
  Eigen::SimplicialLDLT<RSparse> ldlt(M);
  if (ldlt.info() != Eigen::Success)
  {
    throw Error("calderon_residual: mass matrix factorization failed");
  }
  const RVector re = ldlt.solve(RVector(r.real()));
  const RVector im = ldlt.solve(RVector(r.imag()));
  return std::sqrt(std::max(0.0, r.real().dot(re) + r.imag().dot(im)));
}

}  // namespace

CalderonResidual calderon_residual(const BemOperatorSet &ops, const TraceSpaces &spaces,
                                   const CVector &g0, const CVector &g1)
{
  const CVector Mg0 = spaces.M_wz.cast<cplx>() * g0;
  const CVector Mg1 = spaces.M_wz.transpose().cast<cplx>() * g1;
  const CVector r1 = 0.5 * Mg0 - ops.K_wz * g0 + ops.V_ww * g1;
  const CVector r2 = ops.W_zz * g0 + 0.5 * Mg1 + ops.Kp_zw * g1;
  return {dual_norm(spaces.M_ww, r1), dual_norm(spaces.M_zz, r2)};
}

CalderonResidual calderon_residual(const BemOperatorSet &ops, const TraceSpaces &spaces,
                                   const SurfaceField &dirichlet, const SurfaceField &neumann)
{
  return calderon_residual(ops, spaces, interpolate_z(spaces, dirichlet),
                           project_w(spaces, neumann));
}

}  // namespace mortar
