// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_PANEL_QUADRATURE_HPP
#define MORTAR_PANEL_QUADRATURE_HPP

#include <array>
#include <vector>

namespace mortar
{

enum class PairClass
{
  far,
  vertex,
  edge,
  identical
};

// Number of shared vertices -> class (0 far, 1 vertex, 2 edge, 3 identical).
PairClass classify_pair(const int *tri_a, const int *tri_b);

//
// Product rule on two copies of the reference triangle {s, t >= 0, s + t <= 1}. Point q is
// the pair (x[q], y[q]) in reference coordinates and the weights sum to 1/4, the product of
// the reference areas. For the singular classes the shared vertices are assumed to be the
// leading vertices of both triangles, in the same order.
//
struct PanelPairRule
{
  std::vector<std::array<double, 2>> x, y;
  std::vector<double> w;
  std::size_t size() const { return w.size(); }
};

// Singular classes: Sauter-Schwab rules with `order` Gauss points per direction (edge
// 5 order^4, vertex 2 order^4 points). The identical rule uses order / 2 + 2 points in the
// radial direction and order + 2 in the other three. Far: tensor product of two conical
// triangle rules with `order` points per direction. Cached; thread safe.
const PanelPairRule &panel_quadrature(PairClass cls, int order);

}  // namespace mortar

#endif  // MORTAR_PANEL_QUADRATURE_HPP
