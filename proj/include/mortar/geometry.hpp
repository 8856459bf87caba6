// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_GEOMETRY_HPP
#define MORTAR_GEOMETRY_HPP

#include <array>

#include "mortar/types.hpp"

namespace mortar
{

// Affine map of the reference tet and the constant gradients of its barycentric coordinates.
struct TetGeometry
{
  std::array<Vec3, 4> v;
  std::array<Vec3, 4> grad_lambda;
  double volume;

  TetGeometry(const Vec3 &a, const Vec3 &b, const Vec3 &c, const Vec3 &d) : v{a, b, c, d}
  {
    Eigen::Matrix3d J;
    J.col(0) = b - a;
    J.col(1) = c - a;
    J.col(2) = d - a;
    volume = J.determinant() / 6.0;
    const Eigen::Matrix3d Jinv = J.inverse();
    grad_lambda[1] = Jinv.row(0).transpose();
    grad_lambda[2] = Jinv.row(1).transpose();
    grad_lambda[3] = Jinv.row(2).transpose();
    grad_lambda[0] = -(grad_lambda[1] + grad_lambda[2] + grad_lambda[3]);
  }

  Vec3 point(const std::array<double, 3> &r) const
  {
    return v[0] + r[0] * (v[1] - v[0]) + r[1] * (v[2] - v[0]) + r[2] * (v[3] - v[0]);
  }
};

// Flat triangle: affine map, area, unit normal and in-plane barycentric gradients.
struct TriangleGeometry
{
  std::array<Vec3, 3> v;
  std::array<Vec3, 3> grad_lambda;
  Vec3 normal;
  double area;

  TriangleGeometry() = default;
  TriangleGeometry(const Vec3 &a, const Vec3 &b, const Vec3 &c) : v{a, b, c}
  {
    const Vec3 e1 = b - a, e2 = c - a;
    const Vec3 cr = e1.cross(e2);
    area = 0.5 * cr.norm();
    normal = cr / cr.norm();
    const double g11 = e1.dot(e1), g12 = e1.dot(e2), g22 = e2.dot(e2);
    const double det = g11 * g22 - g12 * g12;
    grad_lambda[1] = (g22 * e1 - g12 * e2) / det;
    grad_lambda[2] = (g11 * e2 - g12 * e1) / det;
    grad_lambda[0] = -(grad_lambda[1] + grad_lambda[2]);
  }

  Vec3 point(double xi, double eta) const
  {
    return v[0] + xi * (v[1] - v[0]) + eta * (v[2] - v[0]);
  }

  // Barycentric coordinates of the orthogonal projection of x onto the triangle's plane.
  std::array<double, 3> barycentric(const Vec3 &x) const
  {
    const Vec3 d = x - v[0];
    const double l1 = grad_lambda[1].dot(d), l2 = grad_lambda[2].dot(d);
    return {1.0 - l1 - l2, l1, l2};
  }
};

}  // namespace mortar

#endif  // MORTAR_GEOMETRY_HPP
