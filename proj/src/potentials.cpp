// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/potentials.hpp"

#include <cmath>

#include "mortar/kernel.hpp"
#include "mortar/quadrature.hpp"

namespace mortar
{

namespace
{

// Integrand callback: point y on panel t with barycentrics lambda and weight w.
using PointVisitor = std::function<void(std::size_t t, const Vec3 &y, const double *lambda,
                                        double w)>;

void far_panel(const TraceSpaces &s, std::size_t t, int n, const PointVisitor &f)
{
  const TriangleRule rule = triangle_rule_points(n);
  const TriangleGeometry &g = s.panels[t];
  for (std::size_t q = 0; q < rule.size(); q++)
  {
    const double xi = rule.points[q][0], eta = rule.points[q][1];
    const double lam[3] = {1.0 - xi - eta, xi, eta};
    f(t, g.point(xi, eta), lam, rule.weights[q] * 2.0 * g.area);
  }
}

void near_panel(const TraceSpaces &s, std::size_t t, const Vec3 &x, int n,
                const PointVisitor &f)
{
  const TriangleGeometry &g = s.panels[t];
  const double h = std::abs((x - g.v[0]).dot(g.normal));
  const Vec3 x0 = x - (x - g.v[0]).dot(g.normal) * g.normal;
  const LineRule gl = gauss_legendre(n);
  for (int e = 0; e < 3; e++)
  {
    const Vec3 a = g.v[e] - x0, b = g.v[(e + 1) % 3] - x0;
    // Signed area factor of the subtriangle (x0, a, b) relative to the panel orientation.
    const double jac = a.cross(b).dot(g.normal);
    if (jac == 0.0)
    {
      continue;
    }
    for (int it = 0; it < n; it++)
    {
      const double tt = gl.points[it];
      const Vec3 dir = (1.0 - tt) * a + tt * b;
      const double L = dir.norm();
      const double beta = std::max(h / L, 1e-300);
      const double mu = std::asinh(1.0 / beta);
      for (int iu = 0; iu < n; iu++)
      {
        const double u = gl.points[iu];
        const double sval = beta * std::sinh(u * mu);
        const double ds = beta * mu * std::cosh(u * mu);
        const Vec3 y = x0 + sval * dir;
        const double w = gl.weights[it] * gl.weights[iu] * ds * sval * jac;
        const auto lam = g.barycentric(y);
        f(t, y, lam.data(), w);
      }
    }
  }
}

void integrate(const TraceSpaces &s, const Vec3 &x, const PotentialQuadrature &quad,
               const PointVisitor &f)
{
  for (std::size_t t = 0; t < s.surface->num_triangles(); t++)
  {
    const TriangleGeometry &g = s.panels[t];
    const double diam = s.surface->diameter(t);
    const double dist = (x - s.surface->centroid(t)).norm();
    if (dist > quad.near_factor * diam)
    {
      far_panel(s, t, quad.far_points, f);
      continue;
    }
    const double h = std::abs((x - g.v[0]).dot(g.normal));
    if (h <= 1e-14 * diam)
    {
      const auto lam = g.barycentric(x);
      if (lam[0] >= -1e-12 && lam[1] >= -1e-12 && lam[2] >= -1e-12)
      {
        throw Error("layer potential: evaluation point lies on panel " + std::to_string(t));
      }
    }
    near_panel(s, t, x, quad.near_points, f);
  }
}

}  // namespace

PanelDensity w_density(const TraceSpaces &spaces, const CVector &c)
{
  return [&spaces, c](std::size_t t, const double *lambda)
  { return evaluate_w(spaces, c, t, lambda); };
}

PanelDensity z_density(const TraceSpaces &spaces, const CVector &c)
{
  return [&spaces, c](std::size_t t, const double *lambda)
  { return evaluate_z(spaces, c, t, lambda); };
}

PotentialValue single_layer_potential(double k, const TraceSpaces &spaces,
                                      const PanelDensity &phi, const Vec3 &x,
                                      const PotentialQuadrature &quad)
{
  PotentialValue out{0.0, CVec3::Zero()};
  integrate(spaces, x, quad,
            [&](std::size_t t, const Vec3 &y, const double *lambda, double w)
            {
              const Vec3 d = x - y;
              const double r = d.norm();
              cplx G, dG;
              green_radial(k, r, G, dG);
              const cplx c = phi(t, lambda) * w;
              out.value += G * c;
              out.gradient += (dG * c / r) * d.cast<cplx>();
            });
  return out;
}

PotentialValue double_layer_potential(double k, const TraceSpaces &spaces,
                                      const PanelDensity &psi, const Vec3 &x,
                                      const PotentialQuadrature &quad)
{
  PotentialValue out{0.0, CVec3::Zero()};
  integrate(spaces, x, quad,
            [&](std::size_t t, const Vec3 &y, const double *lambda, double w)
            {
              const Vec3 &n = spaces.panels[t].normal;
              const Vec3 d = x - y;
              const double r = d.norm();
              cplx G, dG;
              green_radial(k, r, G, dG);
              const cplx d2G = green_radial2(k, r);
              const double dn = d.dot(n);
              const cplx c = psi(t, lambda) * w;
              out.value += -dG * dn / r * c;
              out.gradient += (-(d2G - dG / r) * dn / (r * r) * c) * d.cast<cplx>() -
                              (dG / r * c) * n.cast<cplx>();
            });
  return out;
}

}  // namespace mortar
