// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_KERNEL_HPP
#define MORTAR_KERNEL_HPP

#include <cmath>

#include "mortar/types.hpp"

namespace mortar
{

// G(r) = exp(ikr) / (4 pi r) and its radial derivative G'(r) = G (ikr - 1) / r.
inline void green_radial(double k, double r, cplx &G, cplx &dG)
{
  const double s = std::sin(k * r), c = std::cos(k * r);
  const double inv = 1.0 / (4.0 * pi * r);
  const double kr = k * r, ir = inv / r;
  G = cplx(c * inv, s * inv);
  dG = cplx((-c - kr * s) * ir, (kr * c - s) * ir);
}

// Second radial derivative G''(r) = exp(ikr) (2 - 2ikr - k^2 r^2) / (4 pi r^3).
inline cplx green_radial2(double k, double r)
{
  const cplx e(std::cos(k * r), std::sin(k * r));
  return e * cplx(2.0 - k * k * r * r, -2.0 * k * r) / (4.0 * pi * r * r * r);
}

// Helmholtz fundamental solution exp(ik|x - y|) / (4 pi |x - y|). Throws for x == y.
inline cplx green_kernel(double k, const Vec3 &x, const Vec3 &y)
{
  const double r = (x - y).norm();
  if (!(r > 0.0))
  {
    throw Error("green_kernel: coincident points");
  }
  cplx G, dG;
  green_radial(k, r, G, dG);
  return G;
}

}  // namespace mortar

#endif  // MORTAR_KERNEL_HPP
