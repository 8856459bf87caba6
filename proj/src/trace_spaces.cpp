// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/trace_spaces.hpp"

#include <map>

#include "mortar/quadrature.hpp"

namespace mortar
{

namespace
{

RSparse surface_mass(const TraceSpaces &s, bool test_w, bool trial_w)
{
  const TriangleRule rule = triangle_rule(2 * s.degree);
  const int nt = static_cast<int>(s.surface->num_triangles());
  const int na = test_w ? s.w_local() : s.z_local();
  const int nb = trial_w ? s.w_local() : s.z_local();
  std::vector<Eigen::Triplet<double>> trip;
  double pa[10], pb[10];
  std::vector<double> loc(na * nb);
  for (int t = 0; t < nt; t++)
  {
    std::fill(loc.begin(), loc.end(), 0.0);
    for (std::size_t q = 0; q < rule.size(); q++)
    {
      const double lam[3] = {1.0 - rule.points[q][0] - rule.points[q][1], rule.points[q][0],
                             rule.points[q][1]};
      (test_w ? s.w_basis : s.z_basis).eval(lam, pa);
      (trial_w ? s.w_basis : s.z_basis).eval(lam, pb);
      const double w = rule.weights[q] * 2.0 * s.panels[t].area;
      for (int a = 0; a < na; a++)
      {
        for (int b = 0; b < nb; b++)
        {
          loc[a * nb + b] += w * pa[a] * pb[b];
        }
      }
    }
    for (int a = 0; a < na; a++)
    {
      const int row = test_w ? t * na + a : s.z_dofs(t)[a];
      for (int b = 0; b < nb; b++)
      {
        const int col = trial_w ? t * nb + b : s.z_dofs(t)[b];
        trip.emplace_back(row, col, loc[a * nb + b]);
      }
    }
  }
  RSparse M(test_w ? s.num_w() : s.num_z(), trial_w ? s.num_w() : s.num_z());
  M.setFromTriplets(trip.begin(), trip.end());
  M.makeCompressed();
  return M;
}

CVector surface_load(const TraceSpaces &s, const SurfaceField &f, int order, bool w_space)
{
  const TriangleRule rule = triangle_rule(order);
  const SimplexLagrange &basis = w_space ? s.w_basis : s.z_basis;
  const int nl = basis.size();
  CVector b = CVector::Zero(w_space ? s.num_w() : s.num_z());
  double phi[10];
  for (std::size_t t = 0; t < s.surface->num_triangles(); t++)
  {
    const TriangleGeometry &g = s.panels[t];
    for (std::size_t q = 0; q < rule.size(); q++)
    {
      const double xi = rule.points[q][0], eta = rule.points[q][1];
      const double lam[3] = {1.0 - xi - eta, xi, eta};
      basis.eval(lam, phi);
      const cplx fw = f(g.point(xi, eta), g.normal) * (rule.weights[q] * 2.0 * g.area);
      for (int a = 0; a < nl; a++)
      {
        b[w_space ? static_cast<int>(t) * nl + a : s.z_dofs(t)[a]] += fw * phi[a];
      }
    }
  }
  return b;
}

}  // namespace

TraceSpaces build_trace_spaces(std::shared_ptr<const SurfaceMesh> surface, int p)
{
  if (p < 1 || p > 3)
  {
    throw Error("build_trace_spaces: unsupported degree " + std::to_string(p));
  }
  TraceSpaces s;
  s.surface = surface;
  s.degree = p;
  s.w_basis = SimplexLagrange(2, p - 1);
  s.z_basis = SimplexLagrange(2, p);
  const int nt = static_cast<int>(surface->num_triangles());
  const int nzl = s.z_local();
  s.panels.reserve(nt);
  s.z_element_dofs.resize(static_cast<std::size_t>(nt) * nzl);
  std::map<DofKey, int> index;
  for (int t = 0; t < nt; t++)
  {
    const auto &tri = surface->triangles[t];
    const auto &x = surface->vertices;
    s.panels.emplace_back(x[tri[0]], x[tri[1]], x[tri[2]]);
    const int vv[3] = {surface->volume_vertex[tri[0]], surface->volume_vertex[tri[1]],
                       surface->volume_vertex[tri[2]]};
    for (int i = 0; i < nzl; i++)
    {
      const auto &mi = s.z_basis.index(i);
      const DofKey key = make_dof_key(vv, mi, 3);
      auto [it, inserted] = index.emplace(key, s.num_z());
      if (inserted)
      {
        Vec3 pt = Vec3::Zero();
        for (int j = 0; j < 3; j++)
        {
          pt += (mi[j] / static_cast<double>(p)) * x[tri[j]];
        }
        s.z_points.push_back(pt);
        s.z_keys.push_back(key);
      }
      s.z_element_dofs[static_cast<std::size_t>(t) * nzl + i] = it->second;
    }
  }
  s.M_ww = surface_mass(s, true, true);
  s.M_wz = surface_mass(s, true, false);
  s.M_zz = surface_mass(s, false, false);
  return s;
}

std::vector<int> trace_map(const FESpace &volume, const TraceSpaces &spaces)
{
  if (volume.degree != spaces.degree)
  {
    throw Error("trace_map: degree mismatch");
  }
  std::map<DofKey, int> index;
  for (int d : volume.boundary_dofs)
  {
    index.emplace(volume.dof_keys[d], d);
  }
  std::vector<int> map(spaces.num_z());
  for (int j = 0; j < spaces.num_z(); j++)
  {
    auto it = index.find(spaces.z_keys[j]);
    if (it == index.end())
    {
      throw Error("trace_map: surface node " + std::to_string(j) + " is not a boundary node");
    }
    map[j] = it->second;
  }
  return map;
}

RSparse trace_matrix(const FESpace &volume, const TraceSpaces &spaces)
{
  const std::vector<int> map = trace_map(volume, spaces);
  std::vector<Eigen::Triplet<double>> trip;
  for (int j = 0; j < spaces.num_z(); j++)
  {
    trip.emplace_back(map[j], j, 1.0);
  }
  RSparse P(volume.num_dofs(), spaces.num_z());
  P.setFromTriplets(trip.begin(), trip.end());
  return P;
}

CVector interpolate_z(const TraceSpaces &spaces, const SurfaceField &f)
{
  // The normal is taken from the first panel containing the node; fields used here are
  // smooth across panel edges or do not depend on it.
  CVector c(spaces.num_z());
  std::vector<char> done(spaces.num_z(), 0);
  for (std::size_t t = 0; t < spaces.surface->num_triangles(); t++)
  {
    for (int i = 0; i < spaces.z_local(); i++)
    {
      const int d = spaces.z_dofs(t)[i];
      if (!done[d])
      {
        c[d] = f(spaces.z_points[d], spaces.panels[t].normal);
        done[d] = 1;
      }
    }
  }
  return c;
}

CVector load_w(const TraceSpaces &spaces, const SurfaceField &f, int order)
{
  return surface_load(spaces, f, order, true);
}

CVector load_z(const TraceSpaces &spaces, const SurfaceField &f, int order)
{
  return surface_load(spaces, f, order, false);
}

CVector project_w(const TraceSpaces &spaces, const SurfaceField &f)
{
  const CVector b = load_w(spaces, f, 2 * spaces.degree + 2);
  const int nl = spaces.w_local();
  CVector c(spaces.num_w());
  for (std::size_t t = 0; t < spaces.surface->num_triangles(); t++)
  {
    const int o = static_cast<int>(t) * nl;
    RMatrix Mt(nl, nl);
    for (int a = 0; a < nl; a++)
    {
      for (int b = 0; b < nl; b++)
      {
        Mt(a, b) = spaces.M_ww.coeff(o + a, o + b);
      }
    }
    c.segment(o, nl) = Mt.cast<cplx>().lu().solve(b.segment(o, nl));
  }
  return c;
}

cplx evaluate_w(const TraceSpaces &spaces, const CVector &c, std::size_t t, const double *lambda)
{
  double phi[10];
  spaces.w_basis.eval(lambda, phi);
  cplx v = 0.0;
  for (int a = 0; a < spaces.w_local(); a++)
  {
    v += c[static_cast<int>(t) * spaces.w_local() + a] * phi[a];
  }
  return v;
}

cplx evaluate_z(const TraceSpaces &spaces, const CVector &c, std::size_t t, const double *lambda)
{
  double phi[10];
  spaces.z_basis.eval(lambda, phi);
  cplx v = 0.0;
  for (int a = 0; a < spaces.z_local(); a++)
  {
    v += c[spaces.z_dofs(t)[a]] * phi[a];
  }
  return v;
}

void z_curls(const TraceSpaces &spaces, std::size_t t, const double *lambda, Vec3 *curls)
{
  double d[30];
  spaces.z_basis.eval_dlambda(lambda, d);
  const TriangleGeometry &g = spaces.panels[t];
  for (int i = 0; i < spaces.z_local(); i++)
  {
    Vec3 grad = Vec3::Zero();
    for (int j = 0; j < 3; j++)
    {
      grad += d[i * 3 + j] * g.grad_lambda[j];
    }
    curls[i] = g.normal.cross(grad);
  }
}

}  // namespace mortar
