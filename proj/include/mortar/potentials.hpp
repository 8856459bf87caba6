// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_POTENTIALS_HPP
#define MORTAR_POTENTIALS_HPP

#include <functional>

#include "mortar/trace_spaces.hpp"

namespace mortar
{

// Density on the surface, evaluated on panel t at barycentric point lambda.
using PanelDensity = std::function<cplx(std::size_t t, const double *lambda)>;

PanelDensity w_density(const TraceSpaces &spaces, const CVector &c);
PanelDensity z_density(const TraceSpaces &spaces, const CVector &c);

//
// Point evaluation of layer potentials. Panels farther than near_factor * diameter from x
// use the conical rule with far_points per direction. Closer panels are split into three
// subtriangles around the projection of x onto the panel plane and integrated in polar
// form with a sinh transform in the radial direction (near_points per direction), which
// keeps the accuracy uniform as x approaches the surface.
//
struct PotentialQuadrature
{
  int far_points = 6;
  int near_points = 12;
  double near_factor = 2.0;
};

struct PotentialValue
{
  cplx value;
  CVec3 gradient;
};

// Single layer potential int G(x, y) phi(y) dy and its gradient. Throws for x on a panel.
PotentialValue single_layer_potential(double k, const TraceSpaces &spaces,
                                      const PanelDensity &phi, const Vec3 &x,
                                      const PotentialQuadrature &quad = {});

// Double layer potential int d/dn(y) G(x, y) psi(y) dy and its gradient.
PotentialValue double_layer_potential(double k, const TraceSpaces &spaces,
                                      const PanelDensity &psi, const Vec3 &x,
                                      const PotentialQuadrature &quad = {});

}  // namespace mortar

#endif  // MORTAR_POTENTIALS_HPP
