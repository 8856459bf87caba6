// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/medium.hpp"

#include <cmath>
#include <sstream>

#include "mortar/quadrature.hpp"

namespace mortar
{

MediumCoefficients MediumCoefficients::homogeneous(double k)
{
  MediumCoefficients c;
  c.k = k;
  return c;
}

void validate_medium(const MediumCoefficients &coeffs, const VolumeMesh &mesh,
                     int quadrature_degree)
{
  if (!(coeffs.k >= 0.0))
  {
    throw Error("medium: wavenumber must be nonnegative");
  }
  if (!(coeffs.alpha_min > 0.0) || coeffs.alpha_max < coeffs.alpha_min || !(coeffs.n_min > 0.0))
  {
    throw Error("medium: invalid coefficient bounds");
  }
  const auto surf = extract_boundary(mesh);
  std::vector<char> on_boundary(mesh.vertices.size(), 0);
  for (int g : surf.volume_vertex)
  {
    on_boundary[g] = 1;
  }
  const auto rule = volume_quadrature(quadrature_degree);
  auto fail = [&](std::size_t t, const Vec3 &x, const std::string &what)
  {
    std::ostringstream ss;
    ss << "medium: " << what << " in tet " << t << " at (" << x.x() << ", " << x.y() << ", "
       << x.z() << ")";
    throw Error(ss.str());
  };
  for (std::size_t t = 0; t < mesh.tets.size(); t++)
  {
    const auto &v = mesh.tets[t];
    const int region = mesh.region.empty() ? 0 : mesh.region[t];
    const bool touches = on_boundary[v[0]] || on_boundary[v[1]] || on_boundary[v[2]] ||
                         on_boundary[v[3]];
    const Vec3 &x0 = mesh.vertices[v[0]];
    const Vec3 e1 = mesh.vertices[v[1]] - x0, e2 = mesh.vertices[v[2]] - x0,
               e3 = mesh.vertices[v[3]] - x0;
    for (std::size_t q = 0; q < rule.size(); q++)
    {
      const auto &r = rule.points[q];
      const Vec3 x = x0 + r[0] * e1 + r[1] * e2 + r[2] * e3;
      const double a = coeffs.diffusion(x, region);
      const cplx n = coeffs.refraction(x, region);
      if (!(a >= coeffs.alpha_min && a <= coeffs.alpha_max))
      {
        fail(t, x, "diffusion " + std::to_string(a) + " outside its bounds");
      }
      if (!(std::abs(n) >= coeffs.n_min))
      {
        fail(t, x, "refraction index below its lower bound");
      }
      if (touches && (a != 1.0 || n != cplx(1.0)))
      {
        fail(t, x, "coefficients differ from 1 next to the coupling boundary");
      }
    }
  }
}

}  // namespace mortar
