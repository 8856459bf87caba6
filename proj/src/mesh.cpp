// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mortar
{

namespace
{

double signed_volume(const Vec3 &a, const Vec3 &b, const Vec3 &c, const Vec3 &d)
{
  return (b - a).dot((c - a).cross(d - a)) / 6.0;
}

void orient(const std::vector<Vec3> &x, std::array<int, 4> &t)
{
  if (signed_volume(x[t[0]], x[t[1]], x[t[2]], x[t[3]]) < 0.0)
  {
    std::swap(t[2], t[3]);
  }
}

using FaceKey = std::array<int, 3>;
using EdgeKey = std::array<int, 2>;

FaceKey sorted_face(int a, int b, int c)
{
  FaceKey k{a, b, c};
  std::sort(k.begin(), k.end());
  return k;
}

EdgeKey sorted_edge(int a, int b)
{
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

}  // namespace

double VolumeMesh::tet_volume(std::size_t t) const
{
  const auto &v = tets[t];
  return signed_volume(vertices[v[0]], vertices[v[1]], vertices[v[2]], vertices[v[3]]);
}

double VolumeMesh::volume() const
{
  double s = 0.0;
  for (std::size_t t = 0; t < tets.size(); t++)
  {
    s += tet_volume(t);
  }
  return s;
}

Vec3 VolumeMesh::tet_centroid(std::size_t t) const
{
  const auto &v = tets[t];
  return 0.25 * (vertices[v[0]] + vertices[v[1]] + vertices[v[2]] + vertices[v[3]]);
}

double SurfaceMesh::triangle_area(std::size_t t) const
{
  const auto &v = triangles[t];
  return 0.5 * (vertices[v[1]] - vertices[v[0]]).cross(vertices[v[2]] - vertices[v[0]]).norm();
}

double SurfaceMesh::area() const
{
  double s = 0.0;
  for (std::size_t t = 0; t < triangles.size(); t++)
  {
    s += triangle_area(t);
  }
  return s;
}

Vec3 SurfaceMesh::centroid(std::size_t t) const
{
  const auto &v = triangles[t];
  return (vertices[v[0]] + vertices[v[1]] + vertices[v[2]]) / 3.0;
}

double SurfaceMesh::diameter(std::size_t t) const
{
  const auto &v = triangles[t];
  return std::max({(vertices[v[0]] - vertices[v[1]]).norm(),
                   (vertices[v[1]] - vertices[v[2]]).norm(),
                   (vertices[v[2]] - vertices[v[0]]).norm()});
}

double SurfaceMesh::enclosed_volume() const
{
  double s = 0.0;
  for (std::size_t t = 0; t < triangles.size(); t++)
  {
    s += centroid(t).dot(normals[t]) * triangle_area(t) / 3.0;
  }
  return s;
}

VolumeMesh box_mesh(const std::vector<double> &xs, const std::vector<double> &ys,
                    const std::vector<double> &zs,
                    const std::function<int(const Vec3 &)> &region_of)
{
  for (const auto *c : {&xs, &ys, &zs})
  {
    if (c->size() < 2)
    {
      throw MeshError("box_mesh: need at least two grid coordinates per direction");
    }
    for (std::size_t i = 1; i < c->size(); i++)
    {
      if (!((*c)[i] > (*c)[i - 1]))
      {
        throw MeshError("box_mesh: grid coordinates must be strictly increasing");
      }
    }
  }
  const int nx = static_cast<int>(xs.size()), ny = static_cast<int>(ys.size()),
            nz = static_cast<int>(zs.size());
  VolumeMesh mesh;
  mesh.vertices.reserve(std::size_t(nx) * ny * nz);
  for (int k = 0; k < nz; k++)
  {
    for (int j = 0; j < ny; j++)
    {
      for (int i = 0; i < nx; i++)
      {
        mesh.vertices.emplace_back(xs[i], ys[j], zs[k]);
      }
    }
  }
  auto id = [&](int i, int j, int k) { return i + nx * (j + ny * k); };
  // Kuhn subdivision: the six monotone lattice paths from corner 000 to corner 111.
  static constexpr int paths[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int k = 0; k + 1 < nz; k++)
  {
    for (int j = 0; j + 1 < ny; j++)
    {
      for (int i = 0; i + 1 < nx; i++)
      {
        const Vec3 center(0.5 * (xs[i] + xs[i + 1]), 0.5 * (ys[j] + ys[j + 1]),
                          0.5 * (zs[k] + zs[k + 1]));
        const int tag = region_of ? region_of(center) : 0;
        for (const auto &path : paths)
        {
          int c[3] = {0, 0, 0};
          std::array<int, 4> t;
          t[0] = id(i, j, k);
          for (int s = 0; s < 3; s++)
          {
            c[path[s]] = 1;
            t[s + 1] = id(i + c[0], j + c[1], k + c[2]);
          }
          orient(mesh.vertices, t);
          mesh.tets.push_back(t);
          mesh.region.push_back(tag);
        }
      }
    }
  }
  return mesh;
}

VolumeMesh cube_mesh(double side, int n)
{
  if (n < 1)
  {
    throw MeshError("cube_mesh: number of subdivisions must be at least 1");
  }
  if (!(side > 0.0))
  {
    throw MeshError("cube_mesh: side length must be positive");
  }
  std::vector<double> c(n + 1);
  for (int i = 0; i <= n; i++)
  {
    c[i] = side * (static_cast<double>(i) / n - 0.5);
  }
  return box_mesh(c, c, c);
}

VolumeMesh refine_uniform(const VolumeMesh &mesh)
{
  VolumeMesh out;
  out.vertices = mesh.vertices;
  std::map<EdgeKey, int> midpoint;
  auto mid = [&](int a, int b)
  {
    const auto key = sorted_edge(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end())
    {
      return it->second;
    }
    const int id = static_cast<int>(out.vertices.size());
    out.vertices.push_back(0.5 * (mesh.vertices[key[0]] + mesh.vertices[key[1]]));
    midpoint.emplace(key, id);
    return id;
  };
  out.tets.reserve(8 * mesh.tets.size());
  out.region.reserve(8 * mesh.tets.size());
  for (std::size_t t = 0; t < mesh.tets.size(); t++)
  {
    const auto &v = mesh.tets[t];
    int m[4][4];
    for (int a = 0; a < 4; a++)
    {
      for (int b = a + 1; b < 4; b++)
      {
        m[a][b] = m[b][a] = mid(v[a], v[b]);
      }
    }
    std::vector<std::array<int, 4>> children = {{v[0], m[0][1], m[0][2], m[0][3]},
                                                {m[0][1], v[1], m[1][2], m[1][3]},
                                                {m[0][2], m[1][2], v[2], m[2][3]},
                                                {m[0][3], m[1][3], m[2][3], v[3]}};
    // Octahedron diagonals: (01, 23), (02, 13), (03, 12).
    const std::array<std::array<int, 2>, 3> diag = {{{m[0][1], m[2][3]},
                                                     {m[0][2], m[1][3]},
                                                     {m[0][3], m[1][2]}}};
    int best = 0;
    double best_len = 0.0;
    EdgeKey best_key{};
    for (int d = 0; d < 3; d++)
    {
      const double len = (out.vertices[diag[d][0]] - out.vertices[diag[d][1]]).norm();
      const auto key = sorted_edge(diag[d][0], diag[d][1]);
      if (d == 0 || len < best_len - 1e-14 * len ||
          (std::abs(len - best_len) <= 1e-14 * len && key < best_key))
      {
        best = d;
        best_len = len;
        best_key = key;
      }
    }
    // The four remaining octahedron vertices form a cycle around the chosen diagonal.
    const int p = diag[best][0], q = diag[best][1];
    std::vector<int> ring;
    for (int d = 0; d < 3; d++)
    {
      if (d != best)
      {
        ring.push_back(diag[d][0]);
        ring.push_back(diag[d][1]);
      }
    }
    // ring = {a0, a1, b0, b1} where (a0, a1) and (b0, b1) are opposite; cycle a0 b0 a1 b1.
    const int cyc[4] = {ring[0], ring[2], ring[1], ring[3]};
    for (int s = 0; s < 4; s++)
    {
      children.push_back({p, q, cyc[s], cyc[(s + 1) % 4]});
    }
    for (auto &c : children)
    {
      orient(out.vertices, c);
      out.tets.push_back(c);
      out.region.push_back(mesh.region.empty() ? 0 : mesh.region[t]);
    }
  }
  return out;
}

SurfaceMesh extract_boundary(const VolumeMesh &mesh)
{
  std::map<FaceKey, std::vector<ParentFace>> faces;
  for (std::size_t t = 0; t < mesh.tets.size(); t++)
  {
    const auto &v = mesh.tets[t];
    for (int f = 0; f < 4; f++)
    {
      const auto &lf = tet_faces[f];
      faces[sorted_face(v[lf[0]], v[lf[1]], v[lf[2]])].push_back({static_cast<int>(t), f});
    }
  }
  SurfaceMesh surf;
  std::map<int, int> vmap;
  std::vector<std::array<int, 3>> tri_global;
  for (const auto &[key, owners] : faces)
  {
    if (owners.size() > 2)
    {
      throw MeshError("extract_boundary: face shared by more than two tets");
    }
    if (owners.size() != 1)
    {
      continue;
    }
    const auto &pf = owners.front();
    const auto &v = mesh.tets[pf.tet];
    const auto &lf = tet_faces[pf.local_face];
    std::array<int, 3> tri{v[lf[0]], v[lf[1]], v[lf[2]]};
    const Vec3 &a = mesh.vertices[tri[0]], &b = mesh.vertices[tri[1]],
               &c = mesh.vertices[tri[2]];
    Vec3 n = (b - a).cross(c - a);
    const Vec3 fc = (a + b + c) / 3.0;
    if (n.dot(fc - mesh.tet_centroid(pf.tet)) < 0.0)
    {
      std::swap(tri[1], tri[2]);
      n = -n;
    }
    tri_global.push_back(tri);
    surf.parent.push_back(pf);
    surf.normals.push_back(n.normalized());
    for (int g : tri)
    {
      vmap.emplace(g, -1);
    }
  }
  // Surface vertices in increasing volume-vertex order.
  for (auto &[g, s] : vmap)
  {
    s = static_cast<int>(surf.vertices.size());
    surf.vertices.push_back(mesh.vertices[g]);
    surf.volume_vertex.push_back(g);
  }
  std::map<EdgeKey, int> edge_count;
  for (const auto &tri : tri_global)
  {
    surf.triangles.push_back({vmap[tri[0]], vmap[tri[1]], vmap[tri[2]]});
    for (int e = 0; e < 3; e++)
    {
      edge_count[sorted_edge(tri[e], tri[(e + 1) % 3])]++;
    }
  }
  for (const auto &[e, c] : edge_count)
  {
    if (c != 2)
    {
      throw MeshError("extract_boundary: open surface, edge (" + std::to_string(e[0]) + ", " +
                      std::to_string(e[1]) + ") has " + std::to_string(c) +
                      " incident boundary triangles");
    }
  }
  return surf;
}

double mesh_size(const VolumeMesh &mesh)
{
  if (mesh.tets.empty())
  {
    throw MeshError("mesh_size: empty mesh");
  }
  double h = 0.0;
  for (const auto &t : mesh.tets)
  {
    for (int a = 0; a < 4; a++)
    {
      for (int b = a + 1; b < 4; b++)
      {
        h = std::max(h, (mesh.vertices[t[a]] - mesh.vertices[t[b]]).norm());
      }
    }
  }
  return h;
}

double mesh_size(const SurfaceMesh &mesh)
{
  if (mesh.triangles.empty())
  {
    throw MeshError("mesh_size: empty mesh");
  }
  double h = 0.0;
  for (std::size_t t = 0; t < mesh.triangles.size(); t++)
  {
    h = std::max(h, mesh.diameter(t));
  }
  return h;
}

void check_conforming(const VolumeMesh &mesh)
{
  if (mesh.tets.empty())
  {
    throw MeshError("mesh has no tetrahedra");
  }
  if (!mesh.region.empty() && mesh.region.size() != mesh.tets.size())
  {
    throw MeshError("region tags do not match the number of tets");
  }
  std::map<std::array<int, 4>, int> seen;
  for (std::size_t t = 0; t < mesh.tets.size(); t++)
  {
    auto key = mesh.tets[t];
    for (int v : key)
    {
      if (v < 0 || v >= static_cast<int>(mesh.vertices.size()))
      {
        throw MeshError("tet " + std::to_string(t) + " references a missing vertex");
      }
    }
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end())
    {
      throw MeshError("tet " + std::to_string(t) + " has repeated vertices");
    }
    if (!seen.emplace(key, static_cast<int>(t)).second)
    {
      throw MeshError("duplicate element: tet " + std::to_string(t));
    }
    if (!(mesh.tet_volume(t) > 0.0))
    {
      throw MeshError("tet " + std::to_string(t) + " has non-positive volume");
    }
  }
  // Face sharing and boundary closedness; hanging nodes show up as open boundary edges.
  (void)extract_boundary(mesh);
}

}  // namespace mortar
