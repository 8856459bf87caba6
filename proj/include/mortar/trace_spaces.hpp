// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_TRACE_SPACES_HPP
#define MORTAR_TRACE_SPACES_HPP

#include <functional>
#include <memory>
#include <vector>

#include "mortar/fe_space.hpp"
#include "mortar/geometry.hpp"
#include "mortar/lagrange.hpp"
#include "mortar/mesh.hpp"

namespace mortar
{

//
// Boundary spaces on one surface mesh: W_h discontinuous of degree p - 1 (the constant per
// panel for p = 1) and Z_h continuous of degree p. The W_h dof of local function a on
// panel t is t * w_local() + a.
//
struct TraceSpaces
{
  std::shared_ptr<const SurfaceMesh> surface;
  int degree = 1;
  SimplexLagrange w_basis{2, 0};
  SimplexLagrange z_basis{2, 1};
  std::vector<TriangleGeometry> panels;

  std::vector<int> z_element_dofs;  // num_triangles * z_local()
  std::vector<Vec3> z_points;
  std::vector<DofKey> z_keys;  // keyed by parent volume vertices

  // Surface mass matrices, row = test. M_wz pairs W_h (test) with Z_h (trial).
  RSparse M_ww, M_wz, M_zz;

  int w_local() const { return w_basis.size(); }
  int z_local() const { return z_basis.size(); }
  int num_w() const { return static_cast<int>(surface->num_triangles()) * w_local(); }
  int num_z() const { return static_cast<int>(z_points.size()); }
  const int *z_dofs(std::size_t t) const { return z_element_dofs.data() + t * z_local(); }
};

// Throws Error for p outside {1, 2, 3}.
TraceSpaces build_trace_spaces(std::shared_ptr<const SurfaceMesh> surface, int p);

// For every Z_h dof the V_h dof with the same node. Throws if the meshes do not match.
std::vector<int> trace_map(const FESpace &volume, const TraceSpaces &spaces);

// Sparse nV x nZ matrix with a one at (trace_map[j], j).
RSparse trace_matrix(const FESpace &volume, const TraceSpaces &spaces);

using SurfaceField = std::function<cplx(const Vec3 &x, const Vec3 &normal)>;

// Nodal interpolant in Z_h.
CVector interpolate_z(const TraceSpaces &spaces, const SurfaceField &f);

// Panel-wise L2 projection onto W_h (quadrature order 2p + 2).
CVector project_w(const TraceSpaces &spaces, const SurfaceField &f);

// Load vectors (f, phi_i)_Gamma against W_h and Z_h.
CVector load_w(const TraceSpaces &spaces, const SurfaceField &f, int order);
CVector load_z(const TraceSpaces &spaces, const SurfaceField &f, int order);

// Values of a W_h or Z_h coefficient vector on panel t at barycentric point lambda.
cplx evaluate_w(const TraceSpaces &spaces, const CVector &c, std::size_t t, const double *lambda);
cplx evaluate_z(const TraceSpaces &spaces, const CVector &c, std::size_t t, const double *lambda);

// Surface curls n x grad_Gamma phi_i of the Z_h basis on panel t at barycentric point lambda.
void z_curls(const TraceSpaces &spaces, std::size_t t, const double *lambda, Vec3 *curls);

}  // namespace mortar

#endif  // MORTAR_TRACE_SPACES_HPP
