// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_MESH_HPP
#define MORTAR_MESH_HPP

#include <array>
#include <functional>
#include <vector>

#include "mortar/types.hpp"

namespace mortar
{

//
// Straight-sided tetrahedral mesh. Every tet is stored with positive signed volume
// det(v1 - v0, v2 - v0, v3 - v0) > 0.
//
struct VolumeMesh
{
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 4>> tets;
  std::vector<int> region;  // one tag per tet

  std::size_t num_tets() const { return tets.size(); }
  double tet_volume(std::size_t t) const;
  double volume() const;
  Vec3 tet_centroid(std::size_t t) const;
};

// Boundary face of a volume mesh: tet index and the local index of the opposite vertex.
struct ParentFace
{
  int tet;
  int local_face;
};

//
// Triangulated boundary of a VolumeMesh. Triangles are ordered so that
// (v1 - v0) x (v2 - v0) points out of the domain.
//
struct SurfaceMesh
{
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<ParentFace> parent;
  std::vector<Vec3> normals;        // unit outward normal per triangle
  std::vector<int> volume_vertex;   // surface vertex -> parent volume vertex

  std::size_t num_triangles() const { return triangles.size(); }
  double triangle_area(std::size_t t) const;
  double area() const;
  Vec3 centroid(std::size_t t) const;
  double diameter(std::size_t t) const;

  // Volume enclosed by the surface from the divergence theorem.
  double enclosed_volume() const;
};

// Axis-aligned cube of edge length `side` centered at the origin, n^3 subcubes of 6 Kuhn
// tets each.
VolumeMesh cube_mesh(double side, int n);

// Tensor-product box mesh on the grid xs x ys x zs (strictly increasing coordinates), each
// box split into 6 Kuhn tets. The region tag of a tet is region_of(box center).
VolumeMesh box_mesh(const std::vector<double> &xs, const std::vector<double> &ys,
                    const std::vector<double> &zs,
                    const std::function<int(const Vec3 &)> &region_of = {});

// Red refinement: every tet is split into 8 children. The interior octahedron is cut along
// its shortest diagonal (ties broken by the lexicographically smallest vertex pair).
VolumeMesh refine_uniform(const VolumeMesh &mesh);

// All faces owned by exactly one tet, outward oriented. Throws MeshError if the boundary is
// not a closed 2-manifold (some edge not shared by exactly two triangles).
SurfaceMesh extract_boundary(const VolumeMesh &mesh);

// Longest edge over all tets.
double mesh_size(const VolumeMesh &mesh);

// Longest edge over all triangles.
double mesh_size(const SurfaceMesh &mesh);

// Checks positive orientation, face sharing (at most two tets per face, no duplicate tets)
// and a closed boundary. Throws MeshError on violation.
void check_conforming(const VolumeMesh &mesh);

// Indices of the three vertices of local face f (the face opposite local vertex f).
inline constexpr std::array<std::array<int, 3>, 4> tet_faces{
    {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

}  // namespace mortar

#endif  // MORTAR_MESH_HPP
