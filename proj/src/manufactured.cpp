// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/manufactured.hpp"

#include <cmath>

namespace mortar
{

cplx point_source(double k, const Vec3 &x)
{
  const double r = x.norm();
  return std::exp(I * k * r) / r;
}

CVec3 point_source_gradient(double k, const Vec3 &x)
{
  const double r = x.norm();
  const cplx radial = (I * k - 1.0 / r) * std::exp(I * k * r) / r;
  return (radial / r) * x.cast<cplx>();
}

ManufacturedCase make_tc1(double k)
{
  ManufacturedCase c;
  c.name = "tc1";
  c.coeffs = MediumCoefficients::homogeneous(k);
  c.u_int = [k](const Vec3 &x) { return cplx(std::sin(k * x[0]) * std::cos(k * x[1])); };
  c.grad_u_int = [k](const Vec3 &x)
  {
    return CVec3(k * std::cos(k * x[0]) * std::cos(k * x[1]),
                 -k * std::sin(k * x[0]) * std::sin(k * x[1]), 0.0);
  };
  c.u_ext = [k](const Vec3 &x) { return point_source(k, x); };
  c.grad_u_ext = [k](const Vec3 &x) { return point_source_gradient(k, x); };
  // -Laplace u = 2 k^2 u.
  c.f = [k](const Vec3 &x, int) { return cplx(k * k * std::sin(k * x[0]) * std::cos(k * x[1])); };
  return c;
}

int tc2_region(const Vec3 &x)
{
  return std::abs(x[0]) < 0.2 && std::abs(x[1]) < 0.2 && std::abs(x[2]) < 0.2 ? 1 : 0;
}

ManufacturedCase make_tc2(double k)
{
  ManufacturedCase c;
  c.name = "tc2";
  c.coeffs = MediumCoefficients::homogeneous(k);
  c.coeffs.diffusion = [](const Vec3 &, int region) { return region == 1 ? 2.0 : 1.0; };
  c.coeffs.alpha_min = 1.0;
  c.coeffs.alpha_max = 2.0;
  constexpr double a = 2.5 * pi;
  struct S
  {
    double v, d, dd;
  };
  auto s = [](double t)
  {
    const double q = a * (t - 0.2);
    const double sn = std::sin(q);
    return S{sn * sn, a * std::sin(2.0 * q), 2.0 * a * a * std::cos(2.0 * q)};
  };
  c.u_int = [s](const Vec3 &x) { return cplx(s(x[0]).v * s(x[1]).v * s(x[2]).v); };
  c.grad_u_int = [s](const Vec3 &x)
  {
    const S sx = s(x[0]), sy = s(x[1]), sz = s(x[2]);
    return CVec3(sx.d * sy.v * sz.v, sx.v * sy.d * sz.v, sx.v * sy.v * sz.d);
  };
  c.u_ext = [k](const Vec3 &x) { return point_source(k, x); };
  c.grad_u_ext = [k](const Vec3 &x) { return point_source_gradient(k, x); };
  c.f = [s, k](const Vec3 &x, int region)
  {
    const S sx = s(x[0]), sy = s(x[1]), sz = s(x[2]);
    const double lap = sx.dd * sy.v * sz.v + sx.v * sy.dd * sz.v + sx.v * sy.v * sz.dd;
    const double A = region == 1 ? 2.0 : 1.0;
    return cplx(-A * lap - k * k * sx.v * sy.v * sz.v);
  };
  return c;
}

ManufacturedCase make_poly_exact(double k, int p)
{
  ManufacturedCase c;
  c.name = "poly-exact";
  c.coeffs = MediumCoefficients::homogeneous(k);
  const cplx c0(0.7, -0.3);
  // The mortar variable d/dn u + ik u must be piecewise of degree p - 1, so p = 1 only
  // admits constants.
  const CVec3 a = p >= 2 ? CVec3(cplx(0.4, 0.1), cplx(-0.25, 0.2), cplx(0.15, -0.35))
                         : CVec3::Zero();
  c.u_int = [c0, a](const Vec3 &x) { return c0 + a[0] * x[0] + a[1] * x[1] + a[2] * x[2]; };
  c.grad_u_int = [a](const Vec3 &) { return a; };
  c.u_ext = [](const Vec3 &) { return cplx(0.0); };
  c.grad_u_ext = [](const Vec3 &) { return CVec3(CVec3::Zero()); };
  c.f = [c0, a, k](const Vec3 &x, int)
  { return -k * k * (c0 + a[0] * x[0] + a[1] * x[1] + a[2] * x[2]); };
  c.zero_exterior = true;
  c.constant_interior = p < 2;
  return c;
}

ManufacturedCase make_zero_case(double k)
{
  ManufacturedCase c;
  c.name = "zero";
  c.coeffs = MediumCoefficients::homogeneous(k);
  c.u_int = [](const Vec3 &) { return cplx(0.0); };
  c.grad_u_int = [](const Vec3 &) { return CVec3(CVec3::Zero()); };
  c.u_ext = c.u_int;
  c.grad_u_ext = c.grad_u_int;
  c.f = [](const Vec3 &, int) { return cplx(0.0); };
  c.zero_exterior = true;
  c.zero_jumps = true;
  return c;
}

ManufacturedCase make_case(const std::string &name, double k, int p)
{
  if (name == "tc1")
  {
    return make_tc1(k);
  }
  if (name == "tc2")
  {
    return make_tc2(k);
  }
  if (name == "poly-exact")
  {
    return make_poly_exact(k, p);
  }
  if (name == "zero")
  {
    return make_zero_case(k);
  }
  throw ConfigError("unknown case '" + name + "'");
}

}  // namespace mortar
