// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_BEM_OPERATORS_HPP
#define MORTAR_BEM_OPERATORS_HPP

#include "mortar/trace_spaces.hpp"
#include "mortar/types.hpp"

namespace mortar
{

//
// Quadrature settings for panel pairs. Pairs sharing a vertex use Sauter-Schwab rules of
// order `singular_order`. Other pairs use a tensor conical rule whose points per direction
// depend on eta = |centroid distance| / max panel diameter:
// eta < near_eta[0] -> far_points[0], ..., eta >= near_eta[2] -> far_points[3], each raised
// by p - 1.
//
struct BemQuadrature
{
  int singular_order = 8;
  double near_eta[3] = {1.5, 3.0, 6.0};
  int far_points[4] = {5, 4, 3, 2};
};

//
// Galerkin matrices of the boundary integral operators, rows = test functions, dualities
// linear in the trial and antilinear in the test function (the bases are real):
//   V_ww(i,j) = <V psi_j, psi_i>     V_wz(i,j) = <V phi_j, psi_i>   V_zz(i,j) = <V phi_j, phi_i>
//   K_wz(i,j) = <K phi_j, psi_i>     K_zz(i,j) = <K phi_j, phi_i>
//   Kp_zw(i,j) = <K' psi_j, phi_i>   Kp_zz(i,j) = <K' phi_j, phi_i>
//   W_zz(i,j) = <W phi_j, phi_i>
// K has kernel d/dn(y) G, K' has kernel d/dn(x) G, W is assembled in Maue form. The
// Galerkin matrix of <V psi, phi> is V_wz^T.
//
struct BemOperatorSet
{
  double k = 0.0;
  CMatrix V_ww, V_wz, V_zz, K_wz, K_zz, Kp_zw, Kp_zz, W_zz;
};

// All eight matrices from a single sweep over unordered panel pairs. The mirrored pair
// reuses the same quadrature, so Kp_zw == K_wz^T and V_ww == V_ww^T hold bit for bit off
// the diagonal panels.
BemOperatorSet assemble_operators(double k, const TraceSpaces &spaces,
                                  const BemQuadrature &quad = {});

CMatrix assemble_V(double k, const TraceSpaces &spaces, const BemQuadrature &quad = {});
CMatrix assemble_K(double k, const TraceSpaces &spaces, const BemQuadrature &quad = {});
CMatrix assemble_Kp(double k, const TraceSpaces &spaces, const BemQuadrature &quad = {});
CMatrix assemble_W(double k, const TraceSpaces &spaces, const BemQuadrature &quad = {});

// Galerkin matrices of the combined operators, Z_h (trial) x Z_h (test) for
// B_k = -W - ik(1/2 - K), and W_h (trial) x Z_h (test) for A'_k = 1/2 + K' + ik V.
struct CombinedOperators
{
  CMatrix B;
  CMatrix Ap;
};
CombinedOperators assemble_combined(const BemOperatorSet &ops, const TraceSpaces &spaces);

// Operators applied to a closed-form surface density f, tested against W_h or Z_h.
struct OperatorLoads
{
  CVector V_w;   // <V f, psi_i>
  CVector V_z;   // <V f, phi_i>
  CVector Kp_z;  // <K' f, phi_i>
  CVector M_w;   // <f, psi_i>
  CVector M_z;   // <f, phi_i>
};
OperatorLoads apply_operators(double k, const TraceSpaces &spaces, const SurfaceField &f,
                              const BemQuadrature &quad = {});

}  // namespace mortar

#endif  // MORTAR_BEM_OPERATORS_HPP
