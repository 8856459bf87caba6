// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_MEDIUM_HPP
#define MORTAR_MEDIUM_HPP

#include <functional>

#include "mortar/mesh.hpp"
#include "mortar/types.hpp"

namespace mortar
{

//
// Coefficients of -div(A grad u) - (k n)^2 u = f. The diffusion A is real and the
// refraction index n complex; both may depend on position and on the region tag of the
// element, which is how piecewise-constant data aligned with the mesh is expressed.
//
struct MediumCoefficients
{
  double k = 1.0;
  std::function<double(const Vec3 &, int)> diffusion = [](const Vec3 &, int) { return 1.0; };
  std::function<cplx(const Vec3 &, int)> refraction = [](const Vec3 &, int) { return 1.0; };
  double alpha_min = 1.0;  // lower bound for A
  double alpha_max = 1.0;  // upper bound for A
  double n_min = 1.0;      // lower bound for |n|

  static MediumCoefficients homogeneous(double k);
};

// Checks the bounds at the quadrature points of every tet and that A = 1, n = 1 on every
// tet sharing a vertex with the boundary. Throws Error naming the offending tet and point.
void validate_medium(const MediumCoefficients &coeffs, const VolumeMesh &mesh,
                     int quadrature_degree = 4);

}  // namespace mortar

#endif  // MORTAR_MEDIUM_HPP
