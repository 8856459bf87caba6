// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/fe_space.hpp"

#include <algorithm>
#include <map>

#include "mortar/geometry.hpp"

namespace mortar
{

DofKey make_dof_key(const int *vertices, const std::array<int, 4> &multi_index, int nvert)
{
  std::array<std::pair<int, int>, 4> entries;
  int n = 0;
  for (int j = 0; j < nvert; j++)
  {
    if (multi_index[j] > 0)
    {
      entries[n++] = {vertices[j], multi_index[j]};
    }
  }
  std::sort(entries.begin(), entries.begin() + n);
  DofKey key;
  key.fill(-1);
  for (int j = 0; j < n; j++)
  {
    key[2 * j] = entries[j].first;
    key[2 * j + 1] = entries[j].second;
  }
  return key;
}

FESpace build_fe_space(std::shared_ptr<const VolumeMesh> mesh, int p)
{
  if (p < 1 || p > 3)
  {
    throw Error("build_fe_space: unsupported degree " + std::to_string(p));
  }
  FESpace space;
  space.mesh = mesh;
  space.degree = p;
  space.basis = SimplexLagrange(3, p);
  const int nloc = space.basis.size();
  space.element_dofs.resize(mesh->num_tets() * nloc);

  std::map<DofKey, int> index;
  for (std::size_t t = 0; t < mesh->num_tets(); t++)
  {
    const auto &tv = mesh->tets[t];
    for (int i = 0; i < nloc; i++)
    {
      const DofKey key = make_dof_key(tv.data(), space.basis.index(i), 4);
      auto [it, inserted] = index.emplace(key, space.num_dofs());
      if (inserted)
      {
        const auto lam = space.basis.node(i);
        Vec3 x = Vec3::Zero();
        for (int j = 0; j < 4; j++)
        {
          x += lam[j] * mesh->vertices[tv[j]];
        }
        space.dof_points.push_back(x);
        space.dof_keys.push_back(key);
      }
      space.element_dofs[t * nloc + i] = it->second;
    }
  }

  // A node is on the boundary iff it lies on a face owned by one tet.
  std::vector<char> on_boundary(space.num_dofs(), 0);
  std::map<std::array<int, 3>, int> face_count;
  for (const auto &tv : mesh->tets)
  {
    for (const auto &f : tet_faces)
    {
      std::array<int, 3> key{tv[f[0]], tv[f[1]], tv[f[2]]};
      std::sort(key.begin(), key.end());
      face_count[key]++;
    }
  }
  for (std::size_t t = 0; t < mesh->num_tets(); t++)
  {
    const auto &tv = mesh->tets[t];
    for (int lf = 0; lf < 4; lf++)
    {
      const auto &f = tet_faces[lf];
      std::array<int, 3> key{tv[f[0]], tv[f[1]], tv[f[2]]};
      std::sort(key.begin(), key.end());
      if (face_count[key] != 1)
      {
        continue;
      }
      for (int i = 0; i < nloc; i++)
      {
        if (space.basis.index(i)[lf] == 0)
        {
          on_boundary[space.element_dofs[t * nloc + i]] = 1;
        }
      }
    }
  }
  for (int d = 0; d < space.num_dofs(); d++)
  {
    if (on_boundary[d])
    {
      space.boundary_dofs.push_back(d);
    }
  }
  return space;
}

CVector interpolate(const FESpace &space, const std::function<cplx(const Vec3 &)> &f)
{
  CVector u(space.num_dofs());
  for (int d = 0; d < space.num_dofs(); d++)
  {
    u[d] = f(space.dof_points[d]);
  }
  return u;
}

cplx evaluate(const FESpace &space, const CVector &u, std::size_t t, const double *lambda,
              CVec3 *gradient)
{
  const int nloc = space.local_size();
  double phi[20], dphi[80];
  space.basis.eval(lambda, phi);
  const int *dofs = space.dofs(t);
  cplx value = 0.0;
  for (int i = 0; i < nloc; i++)
  {
    value += u[dofs[i]] * phi[i];
  }
  if (gradient)
  {
    const auto &tv = space.mesh->tets[t];
    const auto &x = space.mesh->vertices;
    const TetGeometry g(x[tv[0]], x[tv[1]], x[tv[2]], x[tv[3]]);
    space.basis.eval_dlambda(lambda, dphi);
    gradient->setZero();
    for (int i = 0; i < nloc; i++)
    {
      Vec3 gi = Vec3::Zero();
      for (int j = 0; j < 4; j++)
      {
        gi += dphi[i * 4 + j] * g.grad_lambda[j];
      }
      *gradient += u[dofs[i]] * gi.cast<cplx>();
    }
  }
  return value;
}

}  // namespace mortar
