// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_QUADRATURE_HPP
#define MORTAR_QUADRATURE_HPP

#include <array>
#include <vector>

namespace mortar
{

// One-dimensional rule on [0, 1].
struct LineRule
{
  std::vector<double> points;
  std::vector<double> weights;
};

// Gauss-Legendre rule with n points on [0, 1].
LineRule gauss_legendre(int n);

// Gauss-Jacobi rule with n points on [0, 1] for the weight (1 - t)^alpha. The weights sum
// to 1 / (alpha + 1).
LineRule gauss_jacobi(int n, int alpha);

// Rule on the reference triangle {x, y >= 0, x + y <= 1}; weights sum to 1/2.
struct TriangleRule
{
  std::vector<std::array<double, 2>> points;
  std::vector<double> weights;
  std::size_t size() const { return weights.size(); }
};

// Rule on the reference tetrahedron {x, y, z >= 0, x + y + z <= 1}; weights sum to 1/6.
struct TetRule
{
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
  std::size_t size() const { return weights.size(); }
};

// Conical (collapsed) Gauss-Jacobi product rule with n points per direction, exact for
// polynomials of total degree 2n - 1.
TriangleRule triangle_rule_points(int n);

// Smallest conical rule exact for total degree `degree`. Accepts 0 <= degree <= 30.
TriangleRule triangle_rule(int degree);

// Smallest conical rule exact for total degree `degree`. Accepts 0 <= degree <= 14.
TetRule volume_quadrature(int degree);

}  // namespace mortar

#endif  // MORTAR_QUADRATURE_HPP
