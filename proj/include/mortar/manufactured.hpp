// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_MANUFACTURED_HPP
#define MORTAR_MANUFACTURED_HPP

#include <functional>
#include <string>

#include "mortar/fem_assembly.hpp"
#include "mortar/medium.hpp"
#include "mortar/trace_spaces.hpp"

namespace mortar
{

using ScalarField = std::function<cplx(const Vec3 &)>;
using VectorField = std::function<CVec3(const Vec3 &)>;

//
// Closed-form interior and exterior fields. The interior field solves
// -div(A grad u) - (k n)^2 u = f in the domain, the exterior field is a radiating Helmholtz
// solution, and their trace mismatches are the jump data
//   g1 = u_int - u_ext,   g2 = d/dn u_int - d/dn u_ext   on the boundary.
//
struct ManufacturedCase
{
  std::string name;
  MediumCoefficients coeffs;
  ScalarField u_int;
  VectorField grad_u_int;
  ScalarField u_ext;
  VectorField grad_u_ext;
  VolumeField f;
  // The exterior field is identically zero (its relative errors are then absolute).
  bool zero_exterior = false;
  // The interior field is constant (its H1 seminorm error is then absolute).
  bool constant_interior = false;
  // g1 = g2 = 0 identically; the jump corrections are skipped.
  bool zero_jumps = false;

  double k() const { return coeffs.k; }

  cplx g1(const Vec3 &x) const { return u_int(x) - u_ext(x); }
  cplx g2(const Vec3 &x, const Vec3 &n) const
  {
    return normal_component(grad_u_int(x) - grad_u_ext(x), n);
  }
  // d/dn u_int + ik u_int.
  cplx m_exact(const Vec3 &x, const Vec3 &n) const
  {
    return normal_component(grad_u_int(x), n) + I * k() * u_int(x);
  }
  cplx uext_exact(const Vec3 &x) const { return u_ext(x); }

  static cplx normal_component(const CVec3 &g, const Vec3 &n)
  {
    return g[0] * n[0] + g[1] * n[1] + g[2] * n[2];
  }
};

// Point source exp(ikr)/r at the origin and its gradient.
cplx point_source(double k, const Vec3 &x);
CVec3 point_source_gradient(double k, const Vec3 &x);

// sin(kx)cos(ky) inside with constant coefficients, exp(ikr)/r outside.
ManufacturedCase make_tc1(double k);

// Product of sin^2(5 pi/2 (t - 0.2)) inside, diffusion 2 in (-0.2, 0.2)^3 and 1 elsewhere,
// exp(ikr)/r outside. Region tag 1 marks the inner cube.
ManufacturedCase make_tc2(double k);

// Polynomial interior field reproduced exactly by the discrete spaces of degree p (constant
// for p = 1, affine otherwise) with zero exterior field.
ManufacturedCase make_poly_exact(double k, int p);

// All fields zero.
ManufacturedCase make_zero_case(double k);

// Region tag used by tc2 for a point (1 inside (-0.2, 0.2)^3).
int tc2_region(const Vec3 &x);

// Builds a case by name: "tc1", "tc2", "poly-exact", "zero".
ManufacturedCase make_case(const std::string &name, double k, int p);

}  // namespace mortar

#endif  // MORTAR_MANUFACTURED_HPP
