// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/verify.hpp"

#include <chrono>
#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "mortar/analysis.hpp"
#include "mortar/calderon.hpp"
#include "mortar/coupling.hpp"
#include "mortar/fem_assembly.hpp"
#include "mortar/kernel.hpp"
#include "mortar/manufactured.hpp"
#include "mortar/potentials.hpp"

namespace mortar
{

bool SuiteReport::passed() const
{
  for (const auto &c : checks)
  {
    if (!c.pass)
    {
      return false;
    }
  }
  return !checks.empty();
}

const std::vector<std::string> &suite_names()
{
  static const std::vector<std::string> names = {"kernels", "jumps", "calderon", "energy-k0",
                                                 "conventions"};
  return names;
}

namespace
{

Check at_most(const std::string &name, double value, double threshold)
{
  Check c;
  c.name = name;
  c.value = value;
  c.threshold = threshold;
  c.pass = value <= threshold;
  return c;
}

Check at_least(const std::string &name, double value, double threshold)
{
  Check c;
  c.name = name;
  c.value = value;
  c.threshold = threshold;
  c.pass = value >= threshold;
  c.detail = "lower bound";
  return c;
}

// Strictly decreasing sequence whose last entry is at most threshold.
Check decreasing(const std::string &name, const std::vector<double> &s, double threshold)
{
  Check c;
  c.name = name;
  c.series = s;
  c.value = s.empty() ? INFINITY : s.back();
  c.threshold = threshold;
  c.pass = !s.empty() && c.value <= threshold;
  for (std::size_t i = 1; i < s.size(); i++)
  {
    if (!(s[i] < s[i - 1]))
    {
      c.pass = false;
      c.detail = "not monotone at step " + std::to_string(i);
    }
  }
  return c;
}

std::shared_ptr<const SurfaceMesh> cube_surface(int level)
{
  return std::make_shared<SurfaceMesh>(extract_boundary(cube_mesh(1.0, 1 << (level + 1))));
}

double reference_k() { return 1.5 * std::sqrt(3.0) * pi; }

cplx dn(const CVec3 &g, const Vec3 &n) { return ManufacturedCase::normal_component(g, n); }

// Smallest and second smallest eigenvalue of the Hermitian part.
std::pair<double, double> low_eigenvalues(const CMatrix &A)
{
  const CMatrix H = 0.5 * (A + A.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H, Eigen::EigenvaluesOnly);
  const auto &ev = es.eigenvalues();
  return {ev[0], ev.size() > 1 ? ev[1] : ev[0]};
}

SuiteReport kernels_suite()
{
  SuiteReport r;
  // Radial derivatives against central differences.
  {
    const double k = reference_k();
    double worst = 0.0;
    for (double rad : {0.05, 0.3, 1.1})
    {
      const double step = 1e-5 * rad;
      cplx G, dG, Gp, Gm, dGp, dGm;
      green_radial(k, rad, G, dG);
      green_radial(k, rad + step, Gp, dGp);
      green_radial(k, rad - step, Gm, dGm);
      worst = std::max(worst, std::abs((Gp - Gm) / (2.0 * step) - dG) / std::abs(dG));
      worst = std::max(worst, std::abs((dGp - dGm) / (2.0 * step) - green_radial2(k, rad)) /
                                  std::abs(green_radial2(k, rad)));
    }
    r.checks.push_back(at_most("green radial derivatives vs differences", worst, 1e-6));
  }
  // Laplace operators on the level-1 cube surface.
  {
    const TraceSpaces spaces = build_trace_spaces(cube_surface(1), 1);
    const BemOperatorSet ops = assemble_operators(0.0, spaces);
    const auto v = low_eigenvalues(ops.V_ww);
    const auto w = low_eigenvalues(ops.W_zz);
    r.checks.push_back(at_least("k=0 min eigenvalue of Hermitian part of V", v.first, 1e-300));
    r.checks.push_back(at_least("k=0 second eigenvalue of W", w.second, 1e-300));
    const CVector one = CVector::Ones(spaces.num_z());
    r.checks.push_back(
        at_most("k=0 |W 1| / |W|_F", (ops.W_zz * one).norm() / ops.W_zz.norm(), 1e-10));
    r.checks.push_back(at_most("k=0 |K' - K^H|_F / |K|_F",
                               (ops.Kp_zw - ops.K_wz.adjoint()).norm() / ops.K_wz.norm(), 1e-6));
  }
  // Reciprocity at a positive wavenumber on the level-0 surface.
  {
    const TraceSpaces spaces = build_trace_spaces(cube_surface(0), 1);
    const BemOperatorSet ops = assemble_operators(reference_k(), spaces);
    r.checks.push_back(at_most("|V - V^T| / |V|",
                               (ops.V_ww - ops.V_ww.transpose()).norm() / ops.V_ww.norm(), 1e-8));
    r.checks.push_back(at_most("|W - W^T| / |W|",
                               (ops.W_zz - ops.W_zz.transpose()).norm() / ops.W_zz.norm(), 1e-8));
    r.checks.push_back(at_most("|K' - K^T| / |K| (mixed blocks)",
                               (ops.Kp_zz - ops.K_zz.transpose()).norm() / ops.K_zz.norm(), 1e-8));
  }
  return r;
}

SuiteReport conventions_suite()
{
  SuiteReport r;
  const TraceSpaces spaces = build_trace_spaces(cube_surface(1), 1);
  const BemOperatorSet ops = assemble_operators(0.0, spaces);
  // Interior trace of the double layer of 1 is -1, so K 1 = -1/2.
  const CVector one = CVector::Ones(spaces.num_z());
  const CVector m1 = spaces.M_wz.cast<cplx>() * one;
  r.checks.push_back(
      at_most("k=0 |K 1 + 1/2| relative", (ops.K_wz * one + 0.5 * m1).norm() / m1.norm(), 1e-5));
  // Gauss: double layer of 1 is -1 inside and 0 outside.
  const PanelDensity unit = [](std::size_t, const double *) { return cplx(1.0); };
  const cplx inside = double_layer_potential(0.0, spaces, unit, Vec3(0.1, -0.05, 0.2)).value;
  const cplx outside = double_layer_potential(0.0, spaces, unit, Vec3(0.9, 0.3, -0.2)).value;
  r.checks.push_back(at_most("double layer of 1 inside + 1", std::abs(inside + 1.0), 1e-6));
  r.checks.push_back(at_most("double layer of 1 outside", std::abs(outside), 1e-6));
  // Positive single layer kernel.
  r.checks.push_back(at_least("k=0 min diagonal of V", ops.V_ww.diagonal().real().minCoeff(),
                              1e-300));
  // The interior limit of the normal derivative of the single layer exceeds the exterior
  // one by the density (here 1).
  const Vec3 x0 = spaces.surface->centroid(5);
  const Vec3 n = spaces.panels[5].normal;
  const double e = 1e-3 * spaces.panels[5].area;
  const CVec3 gi = single_layer_potential(0.0, spaces, unit, x0 - e * n).gradient;
  const CVec3 go = single_layer_potential(0.0, spaces, unit, x0 + e * n).gradient;
  r.checks.push_back(at_most("k=0 [dn V 1] - 1", std::abs(dn(gi, n) - dn(go, n) - 1.0), 1e-2));
  return r;
}

SuiteReport jumps_suite()
{
  SuiteReport r;
  const JumpSeries s = jump_probe_series(reference_k(), 4);
  r.checks.push_back(decreasing("[V phi]", s.v, 1e-3));
  r.checks.push_back(decreasing("[dn V phi] - phi", s.dn_v, 1e-3));
  r.checks.push_back(decreasing("[K psi] + psi", s.k, 1e-3));
  r.checks.push_back(decreasing("[dn K psi]", s.dn_k, 1e-3));
  return r;
}

SuiteReport calderon_suite()
{
  SuiteReport r;
  const CalderonSeries s = calderon_series({0, 1, 2});
  Check c;
  c.name = "radiating residual reduction per level";
  c.series = s.radiating;
  c.threshold = 1.5;
  c.value = INFINITY;
  for (std::size_t i = 1; i < s.radiating.size(); i++)
  {
    c.value = std::min(c.value, s.radiating[i - 1] / s.radiating[i]);
  }
  c.pass = s.radiating.size() >= 3 && c.value >= c.threshold;
  c.detail = "lower bound";
  r.checks.push_back(c);
  Check d = at_least("plane wave residual finest / coarsest",
                     s.plane_wave.back() / s.plane_wave.front(), 0.5);
  d.series = s.plane_wave;
  r.checks.push_back(d);
  return r;
}

SuiteReport energy_suite()
{
  SuiteReport r;
  // The identity is algebraic in the assembled blocks; a low singular order keeps it cheap.
  BemQuadrature quad;
  quad.singular_order = 4;
  Check c;
  c.name = "k=0 energy identity max relative discrepancy, levels 0-2";
  c.threshold = 1e-10;
  for (int level = 0; level <= 2; level++)
  {
    const Discretization disc =
        make_discretization(std::make_shared<VolumeMesh>(cube_mesh(1.0, 1 << (level + 1))), 1);
    const SystemParts parts = assemble_parts(MediumCoefficients::homogeneous(0.0), disc, quad);
    const CMatrix T = assemble_T_matrix(parts, disc);
    c.series.push_back(energy_identity_probe(T, parts.interior.S, parts.ops.V_ww,
                                             parts.ops.W_zz, 50, 1 + level));
  }
  c.value = *std::max_element(c.series.begin(), c.series.end());
  c.pass = c.value <= c.threshold;
  r.checks.push_back(c);
  return r;
}

}  // namespace

JumpSeries jump_probe_series(double k, int steps)
{
  const TraceSpaces spaces = build_trace_spaces(cube_surface(0), 1);
  const SurfaceField fphi = [](const Vec3 &x, const Vec3 &)
  { return cplx(std::cos(x[0] + 2.0 * x[1]), 0.5 * x[2]); };
  const SurfaceField fpsi = [](const Vec3 &x, const Vec3 &)
  { return cplx(1.0 + x[0] * x[1], std::sin(x[2] - x[0])); };
  const CVector phi = project_w(spaces, fphi);
  const CVector psi = interpolate_z(spaces, fpsi);
  const PanelDensity dphi = w_density(spaces, phi);
  const PanelDensity dpsi = z_density(spaces, psi);
  const double h = mesh_size(*spaces.surface);
  const int nt = static_cast<int>(spaces.surface->num_triangles());
  const std::vector<int> probes = {0, nt / 4 + 1, nt / 2 + 2, 3 * nt / 4 + 3};
  const double centroid[3] = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

  JumpSeries out;
  for (int j = 0; j < steps; j++)
  {
    const double e = 0.1 * h * std::pow(4.0, -j);
    PotentialQuadrature quad;
    quad.near_points = 8 + 4 * j;
    quad.far_points = 6 + 2 * j;
    double ev = 0.0, edv = 0.0, ek = 0.0, edk = 0.0;
    for (int t : probes)
    {
      const Vec3 x0 = spaces.surface->centroid(t);
      const Vec3 n = spaces.panels[t].normal;
      // Linear extrapolation to the surface from the offsets e and 2e on one side.
      auto limit = [&](const PanelDensity &d, bool dl, double side)
      {
        auto at = [&](double s)
        {
          const Vec3 x = x0 + s * n;
          return dl ? double_layer_potential(k, spaces, d, x, quad)
                    : single_layer_potential(k, spaces, d, x, quad);
        };
        const PotentialValue a = at(side * e), b = at(2.0 * side * e);
        return std::pair<cplx, cplx>(2.0 * a.value - b.value,
                                     2.0 * dn(a.gradient, n) - dn(b.gradient, n));
      };
      const auto vi = limit(dphi, false, -1.0), vo = limit(dphi, false, 1.0);
      const auto ki = limit(dpsi, true, -1.0), ko = limit(dpsi, true, 1.0);
      const cplx phi0 = dphi(t, centroid), psi0 = dpsi(t, centroid);
      ev = std::max(ev, std::abs(vi.first - vo.first) /
                            std::max(std::abs(vi.first), std::abs(vo.first)));
      edv = std::max(edv, std::abs(vi.second - vo.second - phi0) / std::abs(phi0));
      ek = std::max(ek, std::abs(ki.first - ko.first + psi0) / std::abs(psi0));
      edk = std::max(edk, std::abs(ki.second - ko.second) /
                              std::max(std::abs(ki.second), std::abs(ko.second)));
    }
    out.v.push_back(ev);
    out.dn_v.push_back(edv);
    out.k.push_back(ek);
    out.dn_k.push_back(edk);
  }
  return out;
}

CalderonSeries calderon_series(const std::vector<int> &levels, const BemQuadrature &quad)
{
  const double k = reference_k();
  const SurfaceField rad0 = [k](const Vec3 &x, const Vec3 &) { return point_source(k, x); };
  const SurfaceField rad1 = [k](const Vec3 &x, const Vec3 &n)
  { return dn(point_source_gradient(k, x), n); };
  const SurfaceField pw0 = [k](const Vec3 &x, const Vec3 &)
  { return std::exp(I * k * x[0]); };
  const SurfaceField pw1 = [k](const Vec3 &x, const Vec3 &n)
  { return I * k * n[0] * std::exp(I * k * x[0]); };
  CalderonSeries out;
  for (int level : levels)
  {
    const TraceSpaces spaces = build_trace_spaces(cube_surface(level), 1);
    const BemOperatorSet ops = assemble_operators(k, spaces, quad);
    const CalderonResidual a = calderon_residual(ops, spaces, rad0, rad1);
    const CalderonResidual b = calderon_residual(ops, spaces, pw0, pw1);
    out.radiating.push_back(std::max(a.r1, a.r2));
    out.plane_wave.push_back(std::max(b.r1, b.r2));
  }
  return out;
}

SuiteReport run_suite(const std::string &name)
{
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport r;
  if (name == "kernels")
  {
    r = kernels_suite();
  }
  else if (name == "jumps")
  {
    r = jumps_suite();
  }
  else if (name == "calderon")
  {
    r = calderon_suite();
  }
  else if (name == "energy-k0")
  {
    r = energy_suite();
  }
  else if (name == "conventions")
  {
    r = conventions_suite();
  }
  else
  {
    throw ConfigError("unknown suite '" + name + "'");
  }
  r.suite = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace mortar
