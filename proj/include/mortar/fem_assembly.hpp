// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_FEM_ASSEMBLY_HPP
#define MORTAR_FEM_ASSEMBLY_HPP

#include <functional>

#include "mortar/fe_space.hpp"
#include "mortar/medium.hpp"

namespace mortar
{

// S = (A grad u, grad v), M = ((k n)^2 u, v), R = (u, v)_Gamma. Row index = test function.
struct InteriorMatrices
{
  CSparse S, M, R;

  // S - M + ik R.
  CSparse impedance_block(double k) const;
};

// Quadrature order 2p for S and M and 2p on boundary triangles for R. Coefficients are
// validated first (validate_medium).
InteriorMatrices assemble_interior(const FESpace &space, const MediumCoefficients &coeffs);

// Source term f(x, region): entry i is (f, phi_i). order < 0 selects 2p + 2.
using VolumeField = std::function<cplx(const Vec3 &, int)>;
CVector assemble_load(const FESpace &space, const VolumeField &f, int order = -1);

}  // namespace mortar

#endif  // MORTAR_FEM_ASSEMBLY_HPP
