// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_COUPLING_HPP
#define MORTAR_COUPLING_HPP

#include <memory>

#include "mortar/bem_operators.hpp"
#include "mortar/fem_assembly.hpp"
#include "mortar/fe_space.hpp"
#include "mortar/manufactured.hpp"
#include "mortar/trace_spaces.hpp"

namespace mortar
{

// Volume space, boundary spaces and the node correspondence between them for one mesh.
struct Discretization
{
  std::shared_ptr<const VolumeMesh> mesh;
  std::shared_ptr<const SurfaceMesh> surface;
  FESpace volume;
  TraceSpaces trace;
  RSparse trace_matrix;  // nV x nZ
  double h = 0.0;        // longest volume edge
};

Discretization make_discretization(std::shared_ptr<const VolumeMesh> mesh, int p);

//
// Three-field system in the unknowns (u, m, uext):
//
//   [ A    B1   0  ] [u   ]   [f ]
//   [ 0    B2   B3 ] [m   ] = [r2]
//   [ B4   B5   B6 ] [uext]   [r3]
//
// with
//   A  = S - M + ik R                         B1 = -C,   C(i,j) = <psi_j, v_i>
//   B2 = -<A'_k psi_j, phi_i>                 B3 = <(B_k + ik A'_k) phi_j, phi_i>
//   B4 = C^T    B5 = <V psi_j, psi_i>         B6 = -<(1/2 + K) phi_j + ik V phi_j, psi_i>
//
// Rows 2 and 3 are the exterior Calderon identities in impedance form, tested with Z_h and
// W_h respectively.
//
struct BlockSystem
{
  double k = 0.0;
  int nV = 0, nW = 0, nZ = 0;
  CSparse A, B1, B4;
  CMatrix B2, B3, B5, B6;
  CVector f, r2, r3;

  int size() const { return nV + nW + nZ; }
  CVector rhs() const;
  CVector apply(const CVector &x) const;
  CMatrix dense() const;
};

// Everything the block system is assembled from, kept for diagnostics.
struct SystemParts
{
  InteriorMatrices interior;
  BemOperatorSet ops;
  RSparse C;  // nV x nW
};

SystemParts assemble_parts(const MediumCoefficients &coeffs, const Discretization &disc,
                           const BemQuadrature &quad);

BlockSystem assemble_block_system(const SystemParts &parts, const Discretization &disc);

// Full assembly for a manufactured case: blocks, load f, and the jump corrections.
BlockSystem assemble_block_system(const ManufacturedCase &mcase, const Discretization &disc,
                                  const BemQuadrature &quad = {}, SystemParts *parts = nullptr);

//
// Right-hand sides of rows 2 and 3 for nonzero jumps. With d = ik g1 + g2 the exterior
// Cauchy data are gamma0 u_ext = uext and gamma1 u_ext = m - ik uext - d, which turns the
// homogeneous rows into
//   r2 = -<A'_k d, phi_i>
//   r3 = <g1, psi_i> + <V_k d, psi_i>.
// Row 1 needs no correction since f is built from u_int.
//
void apply_jump_corrections(const ManufacturedCase &mcase, const Discretization &disc,
                            const BemQuadrature &quad, BlockSystem &system);

//
// Matrix of the sesquilinear form T((u, m, uext), (v, lambda, w)) = row1(v) - row2(w) +
// row3(lambda), rows ordered (v, lambda, w) and columns (u, m, uext), built directly from
// the component matrices.
//
CMatrix assemble_T_matrix(const SystemParts &parts, const Discretization &disc);
CMatrix assemble_T_matrix(double k, const MediumCoefficients &coeffs, const Discretization &disc,
                          const BemQuadrature &quad = {});

}  // namespace mortar

#endif  // MORTAR_COUPLING_HPP
