// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mortar/geometry.hpp"
#include "mortar/mesh.hpp"
#include "mortar/quadrature.hpp"

namespace mortar
{

namespace
{

double ratio(double num, double den, const char *what)
{
  if (!(den > 0.0))
  {
    throw Error(std::string("compute_errors: exact ") + what + " norm is zero");
  }
  return std::sqrt(num / den);
}

// Volume rule of degree q on the reference tet. Past the largest tabulated degree the
// degree-14 rule is applied on the children of ceil(log2(q / 14)) red refinements.
TetRule error_rule(int q)
{
  if (q <= 14)
  {
    return volume_quadrature(q);
  }
  VolumeMesh ref;
  ref.vertices = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
  ref.tets = {{0, 1, 2, 3}};
  ref.region = {0};
  for (int scale = 14; scale < q; scale *= 2)
  {
    ref = refine_uniform(ref);
  }
  const TetRule base = volume_quadrature(14);
  TetRule r;
  for (std::size_t t = 0; t < ref.num_tets(); t++)
  {
    const auto &tv = ref.tets[t];
    const Vec3 &x0 = ref.vertices[tv[0]];
    const Vec3 e1 = ref.vertices[tv[1]] - x0, e2 = ref.vertices[tv[2]] - x0,
               e3 = ref.vertices[tv[3]] - x0;
    const double jac = ref.tet_volume(t) * 6.0;
    for (std::size_t i = 0; i < base.size(); i++)
    {
      const auto &b = base.points[i];
      const Vec3 x = x0 + b[0] * e1 + b[1] * e2 + b[2] * e3;
      r.points.push_back({x[0], x[1], x[2]});
      r.weights.push_back(base.weights[i] * jac);
    }
  }
  return r;
}

}  // namespace

ErrorReport compute_errors(const SolutionTriple &x, const ManufacturedCase &mcase,
                           const Discretization &disc, int order)
{
  const int p = disc.volume.degree;
  const int q = order < 0 ? std::max(2 * p + 2, 14) : order;
  const VolumeMesh &mesh = *disc.mesh;

  double e0 = 0.0, u0 = 0.0, e1 = 0.0, u1 = 0.0;
  const TetRule rule = error_rule(q);
  for (std::size_t t = 0; t < mesh.num_tets(); t++)
  {
    const auto &tv = mesh.tets[t];
    const auto &xv = mesh.vertices;
    const TetGeometry g(xv[tv[0]], xv[tv[1]], xv[tv[2]], xv[tv[3]]);
    for (std::size_t i = 0; i < rule.size(); i++)
    {
      const auto &r = rule.points[i];
      const double lam[4] = {1.0 - r[0] - r[1] - r[2], r[0], r[1], r[2]};
      const double w = rule.weights[i] * 6.0 * g.volume;
      const Vec3 xq = g.point(r);
      CVec3 gh;
      const cplx uh = evaluate(disc.volume, x.u, t, lam, &gh);
      const cplx u = mcase.u_int(xq);
      const CVec3 gu = mcase.grad_u_int(xq);
      e0 += w * std::norm(u - uh);
      u0 += w * std::norm(u);
      e1 += w * (gu - gh).squaredNorm();
      u1 += w * gu.squaredNorm();
    }
  }

  double em = 0.0, m0 = 0.0, ee = 0.0, ue = 0.0;
  const TriangleRule trule = triangle_rule(std::min(q, 30));
  const TraceSpaces &ts = disc.trace;
  for (std::size_t t = 0; t < ts.surface->num_triangles(); t++)
  {
    const TriangleGeometry &g = ts.panels[t];
    for (std::size_t i = 0; i < trule.size(); i++)
    {
      const double xi = trule.points[i][0], eta = trule.points[i][1];
      const double lam[3] = {1.0 - xi - eta, xi, eta};
      const double w = trule.weights[i] * 2.0 * g.area;
      const Vec3 xq = g.point(xi, eta);
      const cplx m = mcase.m_exact(xq, g.normal);
      const cplx ue_x = mcase.uext_exact(xq);
      em += w * std::norm(m - evaluate_w(ts, x.m, t, lam));
      m0 += w * std::norm(m);
      ee += w * std::norm(ue_x - evaluate_z(ts, x.uext, t, lam));
      ue += w * std::norm(ue_x);
    }
  }

  ErrorReport rep;
  rep.h = disc.h;
  rep.p = p;
  rep.k = mcase.k();
  rep.l2_omega = ratio(e0, u0, "L2");
  rep.h1_omega = mcase.constant_interior ? std::sqrt(e1) : ratio(e1, u1, "H1");
  rep.mortar = std::sqrt(disc.h) * ratio(em, m0, "mortar");
  rep.trace = (mcase.zero_exterior ? std::sqrt(ee) : ratio(ee, ue, "exterior trace")) /
              std::sqrt(disc.h);
  rep.solver = x.solver;
  rep.residual = x.residual;
  rep.iterations = x.iterations;
  rep.seconds = x.seconds;
  return rep;
}

SolutionTriple interpolate_exact(const ManufacturedCase &mcase, const Discretization &disc)
{
  SolutionTriple x;
  x.u = interpolate(disc.volume, mcase.u_int);
  x.m = project_w(disc.trace, [&mcase](const Vec3 &p, const Vec3 &n)
                  { return mcase.m_exact(p, n); });
  x.uext = interpolate_z(disc.trace, [&mcase](const Vec3 &p, const Vec3 &)
                         { return mcase.uext_exact(p); });
  x.solver = "interpolant";
  return x;
}

RateEstimate convergence_rate(const std::vector<double> &h, const std::vector<double> &e)
{
  if (h.size() < 2 || h.size() != e.size())
  {
    throw Error("convergence_rate: need at least two levels");
  }
  for (std::size_t i = 0; i + 1 < h.size(); i++)
  {
    if (!(h[i + 1] < h[i]))
    {
      throw Error("convergence_rate: mesh sizes must decrease strictly");
    }
  }
  RateEstimate r;
  const std::size_t n = h.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; i++)
  {
    const double lx = std::log(h[i]), ly = std::log(e[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    if (i + 1 < n)
    {
      r.consecutive.push_back(std::log(e[i] / e[i + 1]) / std::log(h[i] / h[i + 1]));
    }
  }
  r.least_squares = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return r;
}

ConvergenceRates convergence_rates(const std::vector<ErrorReport> &reports)
{
  std::vector<double> h, a, b, c, d;
  for (const auto &r : reports)
  {
    h.push_back(r.h);
    a.push_back(r.l2_omega);
    b.push_back(r.h1_omega);
    c.push_back(r.mortar);
    d.push_back(r.trace);
  }
  return {convergence_rate(h, a), convergence_rate(h, b), convergence_rate(h, c),
          convergence_rate(h, d)};
}

double energy_identity_probe(const CMatrix &T, const CSparse &S, const CMatrix &V_ww,
                             const CMatrix &W_zz, int trials, std::uint64_t seed)
{
  if (trials <= 0)
  {
    throw Error("energy_identity_probe: no trials");
  }
  const int nV = static_cast<int>(S.rows()), nW = static_cast<int>(V_ww.rows()),
            nZ = static_cast<int>(W_zz.rows());
  if (T.rows() != nV + nW + nZ || T.cols() != T.rows() || S.cols() != nV ||
      V_ww.cols() != nW || W_zz.cols() != nZ)
  {
    throw Error("energy_identity_probe: dimension mismatch");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int trial = 0; trial < trials; trial++)
  {
    CVector x(nV + nW + nZ);
    for (int i = 0; i < x.size(); i++)
    {
      x[i] = normal(rng);
    }
    const CVector u = x.segment(0, nV), m = x.segment(nV, nW), e = x.segment(nV + nW, nZ);
    const cplx form = x.dot(T * x);
    const cplx energy = u.dot(S * u) + m.dot(V_ww * m) + e.dot(W_zz * e);
    worst = std::max(worst, std::abs(form - energy) / std::abs(energy));
  }
  return worst;
}

double min_real_quadratic_form(const CMatrix &T, int trials, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double lowest = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; trial++)
  {
    CVector x(T.rows());
    for (int i = 0; i < x.size(); i++)
    {
      x[i] = cplx(normal(rng), normal(rng));
    }
    lowest = std::min(lowest, std::real(x.dot(T * x)) / x.squaredNorm());
  }
  return lowest;
}

}  // namespace mortar
