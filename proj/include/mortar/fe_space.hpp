// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_FE_SPACE_HPP
#define MORTAR_FE_SPACE_HPP

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "mortar/lagrange.hpp"
#include "mortar/mesh.hpp"
#include "mortar/types.hpp"

namespace mortar
{

// Global identity of a Lagrange node: the sorted (vertex, multiplicity) pairs of its
// barycentric multi-index, padded with -1. Two elements that share a node produce the same
// key, whatever their local vertex order.
using DofKey = std::array<int, 8>;

DofKey make_dof_key(const int *vertices, const std::array<int, 4> &multi_index, int nvert);

//
// Continuous Lagrange space of degree p on a tetrahedral mesh.
//
struct FESpace
{
  std::shared_ptr<const VolumeMesh> mesh;
  int degree = 1;
  SimplexLagrange basis{3, 1};

  std::vector<Vec3> dof_points;
  std::vector<DofKey> dof_keys;
  std::vector<int> element_dofs;   // num_tets * local_size()
  std::vector<int> boundary_dofs;  // increasing

  int num_dofs() const { return static_cast<int>(dof_points.size()); }
  int local_size() const { return basis.size(); }
  const int *dofs(std::size_t t) const { return element_dofs.data() + t * local_size(); }
};

// Throws Error for p outside {1, 2, 3}.
FESpace build_fe_space(std::shared_ptr<const VolumeMesh> mesh, int p);

// Nodal interpolant of f.
CVector interpolate(const FESpace &space, const std::function<cplx(const Vec3 &)> &f);

// Value and gradient of the discrete function u inside tet t at barycentric point lambda.
cplx evaluate(const FESpace &space, const CVector &u, std::size_t t, const double *lambda,
              CVec3 *gradient = nullptr);

}  // namespace mortar

#endif  // MORTAR_FE_SPACE_HPP
