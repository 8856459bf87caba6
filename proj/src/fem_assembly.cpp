// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/fem_assembly.hpp"

#include "mortar/geometry.hpp"
#include "mortar/parallel.hpp"
#include "mortar/quadrature.hpp"

namespace mortar
{

CSparse InteriorMatrices::impedance_block(double k) const
{
  CSparse A = S - M + (I * k) * R;
  A.makeCompressed();
  return A;
}

InteriorMatrices assemble_interior(const FESpace &space, const MediumCoefficients &coeffs)
{
  const VolumeMesh &mesh = *space.mesh;
  validate_medium(coeffs, mesh, 2 * space.degree);
  const int nloc = space.local_size();
  const int nt = static_cast<int>(mesh.num_tets());
  const TetRule rule = volume_quadrature(2 * space.degree);
  const double k2 = coeffs.k * coeffs.k;

  // Local matrices are computed independently and scattered in element order.
  std::vector<double> Sloc(static_cast<std::size_t>(nt) * nloc * nloc);
  std::vector<cplx> Mloc(static_cast<std::size_t>(nt) * nloc * nloc);
  parallel_for(nt,
               [&](int t)
               {
                 const auto &tv = mesh.tets[t];
                 const auto &x = mesh.vertices;
                 const TetGeometry g(x[tv[0]], x[tv[1]], x[tv[2]], x[tv[3]]);
                 double *Se = &Sloc[static_cast<std::size_t>(t) * nloc * nloc];
                 cplx *Me = &Mloc[static_cast<std::size_t>(t) * nloc * nloc];
                 double phi[20], dphi[80];
                 std::vector<Vec3> grad(nloc);
                 for (std::size_t q = 0; q < rule.size(); q++)
                 {
                   const auto &r = rule.points[q];
                   const double lam[4] = {1.0 - r[0] - r[1] - r[2], r[0], r[1], r[2]};
                   const Vec3 xq = g.point(r);
                   const double w = rule.weights[q] * 6.0 * g.volume;
                   const double a = coeffs.diffusion(xq, mesh.region[t]);
                   const cplx n = coeffs.refraction(xq, mesh.region[t]);
                   const cplx m = k2 * n * n;
                   space.basis.eval(lam, phi);
                   space.basis.eval_dlambda(lam, dphi);
                   for (int i = 0; i < nloc; i++)
                   {
                     grad[i].setZero();
                     for (int j = 0; j < 4; j++)
                     {
                       grad[i] += dphi[i * 4 + j] * g.grad_lambda[j];
                     }
                   }
                   for (int i = 0; i < nloc; i++)
                   {
                     for (int j = 0; j < nloc; j++)
                     {
                       Se[i * nloc + j] += w * a * grad[i].dot(grad[j]);
                       Me[i * nloc + j] += w * m * phi[i] * phi[j];
                     }
                   }
                 }
               });

  std::vector<Eigen::Triplet<cplx>> ts, tm;
  ts.reserve(Sloc.size());
  tm.reserve(Mloc.size());
  for (int t = 0; t < nt; t++)
  {
    const int *dofs = space.dofs(t);
    for (int i = 0; i < nloc; i++)
    {
      for (int j = 0; j < nloc; j++)
      {
        const std::size_t o = static_cast<std::size_t>(t) * nloc * nloc + i * nloc + j;
        ts.emplace_back(dofs[i], dofs[j], Sloc[o]);
        tm.emplace_back(dofs[i], dofs[j], Mloc[o]);
      }
    }
  }
  InteriorMatrices out;
  const int n = space.num_dofs();
  out.S.resize(n, n);
  out.M.resize(n, n);
  out.R.resize(n, n);
  out.S.setFromTriplets(ts.begin(), ts.end());
  out.M.setFromTriplets(tm.begin(), tm.end());

  // Boundary mass on the faces owned by a single tet.
  const SurfaceMesh surface = extract_boundary(mesh);
  const TriangleRule trule = triangle_rule(2 * space.degree);
  std::vector<Eigen::Triplet<cplx>> tr;
  for (std::size_t f = 0; f < surface.num_triangles(); f++)
  {
    const int t = surface.parent[f].tet;
    const int lf = surface.parent[f].local_face;
    const auto &tri = surface.triangles[f];
    const TriangleGeometry g(surface.vertices[tri[0]], surface.vertices[tri[1]],
                             surface.vertices[tri[2]]);
    const auto &tv = mesh.tets[t];
    // Position of each surface triangle vertex inside the parent tet.
    int local_of[3];
    for (int a = 0; a < 3; a++)
    {
      for (int j = 0; j < 4; j++)
      {
        if (tv[j] == surface.volume_vertex[tri[a]])
        {
          local_of[a] = j;
        }
      }
    }
    std::vector<int> face_dofs;
    for (int i = 0; i < nloc; i++)
    {
      if (space.basis.index(i)[lf] == 0)
      {
        face_dofs.push_back(i);
      }
    }
    const int nf = static_cast<int>(face_dofs.size());
    std::vector<double> loc(nf * nf, 0.0);
    double phi[20];
    for (std::size_t q = 0; q < trule.size(); q++)
    {
      const double xi = trule.points[q][0], eta = trule.points[q][1];
      double lam[4] = {0, 0, 0, 0};
      lam[local_of[0]] = 1.0 - xi - eta;
      lam[local_of[1]] = xi;
      lam[local_of[2]] = eta;
      space.basis.eval(lam, phi);
      const double w = trule.weights[q] * 2.0 * g.area;
      for (int a = 0; a < nf; a++)
      {
        for (int b = 0; b < nf; b++)
        {
          loc[a * nf + b] += w * phi[face_dofs[a]] * phi[face_dofs[b]];
        }
      }
    }
    const int *dofs = space.dofs(t);
    for (int a = 0; a < nf; a++)
    {
      for (int b = 0; b < nf; b++)
      {
        tr.emplace_back(dofs[face_dofs[a]], dofs[face_dofs[b]], loc[a * nf + b]);
      }
    }
  }
  out.R.setFromTriplets(tr.begin(), tr.end());
  out.S.makeCompressed();
  out.M.makeCompressed();
  out.R.makeCompressed();
  return out;
}

CVector assemble_load(const FESpace &space, const VolumeField &f, int order)
{
  const VolumeMesh &mesh = *space.mesh;
  const int nloc = space.local_size();
  const int nt = static_cast<int>(mesh.num_tets());
  const TetRule rule = volume_quadrature(order < 0 ? 2 * space.degree + 2 : order);
  std::vector<cplx> loc(static_cast<std::size_t>(nt) * nloc, 0.0);
  parallel_for(nt,
               [&](int t)
               {
                 const auto &tv = mesh.tets[t];
                 const auto &x = mesh.vertices;
                 const TetGeometry g(x[tv[0]], x[tv[1]], x[tv[2]], x[tv[3]]);
                 double phi[20];
                 for (std::size_t q = 0; q < rule.size(); q++)
                 {
                   const auto &r = rule.points[q];
                   const double lam[4] = {1.0 - r[0] - r[1] - r[2], r[0], r[1], r[2]};
                   const cplx fw =
                       f(g.point(r), mesh.region[t]) * (rule.weights[q] * 6.0 * g.volume);
                   space.basis.eval(lam, phi);
                   for (int i = 0; i < nloc; i++)
                   {
                     loc[static_cast<std::size_t>(t) * nloc + i] += fw * phi[i];
                   }
                 }
               });
  CVector b = CVector::Zero(space.num_dofs());
  for (int t = 0; t < nt; t++)
  {
    const int *dofs = space.dofs(t);
    for (int i = 0; i < nloc; i++)
    {
      b[dofs[i]] += loc[static_cast<std::size_t>(t) * nloc + i];
    }
  }
  return b;
}

}  // namespace mortar
