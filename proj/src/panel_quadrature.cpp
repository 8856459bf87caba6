// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/panel_quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "mortar/quadrature.hpp"
#include "mortar/types.hpp"

namespace mortar
{

namespace
{

// Sauter-Schwab points live on {0 <= x2 <= x1 <= 1}; (x1 - x2, x2) maps them to the unit
// triangle with the singular vertex at the origin.
void push(PanelPairRule &r, double x1, double x2, double y1, double y2, double w)
{
  r.x.push_back({x1 - x2, x2});
  r.y.push_back({y1 - y2, y2});
  r.w.push_back(w);
}

// The xi direction carries a polynomial times the oscillatory factor once the Jacobian
// cancels the singularity, so it gets fewer points than the three angular directions.
PanelPairRule identical_rule(int n)
{
  const LineRule gx = gauss_legendre(n / 2 + 2), g = gauss_legendre(n + 2);
  const int nx = static_cast<int>(gx.points.size()), ne = static_cast<int>(g.points.size());
  PanelPairRule r;
  for (int a = 0; a < nx; a++)
    for (int b = 0; b < ne; b++)
      for (int c = 0; c < ne; c++)
        for (int d = 0; d < ne; d++)
        {
          const double xi = gx.points[a], e1 = g.points[b], e2 = g.points[c], e3 = g.points[d];
          const double w =
              gx.weights[a] * g.weights[b] * g.weights[c] * g.weights[d] * xi * xi * xi * e1 * e1 * e2;
          push(r, xi, xi * (1 - e1 + e1 * e2), xi * (1 - e1 * e2 * e3), xi * (1 - e1), w);
          push(r, xi * (1 - e1 * e2 * e3), xi * (1 - e1), xi, xi * (1 - e1 + e1 * e2), w);
          push(r, xi, xi * (e1 * (1 - e2 + e2 * e3)), xi * (1 - e1 * e2), xi * (e1 * (1 - e2)), w);
          push(r, xi * (1 - e1 * e2), xi * (e1 * (1 - e2)), xi, xi * (e1 * (1 - e2 + e2 * e3)), w);
          push(r, xi * (1 - e1 * e2 * e3), xi * (e1 * (1 - e2 * e3)), xi, xi * (e1 * (1 - e2)), w);
          push(r, xi, xi * (e1 * (1 - e2)), xi * (1 - e1 * e2 * e3), xi * (e1 * (1 - e2 * e3)), w);
        }
  return r;
}

PanelPairRule edge_rule(int n)
{
  const LineRule g = gauss_legendre(n);
  PanelPairRule r;
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++)
      for (int c = 0; c < n; c++)
        for (int d = 0; d < n; d++)
        {
          const double xi = g.points[a], e1 = g.points[b], e2 = g.points[c], e3 = g.points[d];
          const double w0 = g.weights[a] * g.weights[b] * g.weights[c] * g.weights[d];
          const double w = w0 * xi * xi * xi * e1 * e1 * e2;
          push(r, xi, xi * e1 * e3, xi * (1 - e1 * e2), xi * e1 * (1 - e2), w0 * xi * xi * xi * e1 * e1);
          push(r, xi, xi * e1, xi * (1 - e1 * e2 * e3), xi * e1 * e2 * (1 - e3), w);
          push(r, xi * (1 - e1 * e2), xi * e1 * (1 - e2), xi, xi * e1 * e2 * e3, w);
          push(r, xi * (1 - e1 * e2 * e3), xi * e1 * e2 * (1 - e3), xi, xi * e1, w);
          push(r, xi * (1 - e1 * e2 * e3), xi * e1 * (1 - e2 * e3), xi, xi * e1 * e2, w);
        }
  return r;
}

PanelPairRule vertex_rule(int n)
{
  const LineRule g = gauss_legendre(n);
  PanelPairRule r;
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++)
      for (int c = 0; c < n; c++)
        for (int d = 0; d < n; d++)
        {
          const double xi = g.points[a], e1 = g.points[b], e2 = g.points[c], e3 = g.points[d];
          const double w = g.weights[a] * g.weights[b] * g.weights[c] * g.weights[d] * xi * xi * xi * e2;
          push(r, xi, xi * e1, xi * e2, xi * e2 * e3, w);
          push(r, xi * e2, xi * e2 * e3, xi, xi * e1, w);
        }
  return r;
}

PanelPairRule far_rule(int n)
{
  const TriangleRule t = triangle_rule_points(n);
  PanelPairRule r;
  for (std::size_t a = 0; a < t.size(); a++)
  {
    for (std::size_t b = 0; b < t.size(); b++)
    {
      r.x.push_back(t.points[a]);
      r.y.push_back(t.points[b]);
      r.w.push_back(t.weights[a] * t.weights[b]);
    }
  }
  return r;
}

}  // namespace

PairClass classify_pair(const int *tri_a, const int *tri_b)
{
  int shared = 0;
  for (int i = 0; i < 3; i++)
  {
    for (int j = 0; j < 3; j++)
    {
      shared += tri_a[i] == tri_b[j];
    }
  }
  return static_cast<PairClass>(shared);
}

const PanelPairRule &panel_quadrature(PairClass cls, int order)
{
  if (order < 1 || order > 40)
  {
    throw Error("panel_quadrature: unsupported order " + std::to_string(order));
  }
  static std::mutex lock;
  static std::map<std::pair<int, int>, std::unique_ptr<PanelPairRule>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto &slot = cache[{static_cast<int>(cls), order}];
  if (!slot)
  {
    switch (cls)
    {
      case PairClass::identical:
        slot = std::make_unique<PanelPairRule>(identical_rule(order));
        break;
      case PairClass::edge:
        slot = std::make_unique<PanelPairRule>(edge_rule(order));
        break;
      case PairClass::vertex:
        slot = std::make_unique<PanelPairRule>(vertex_rule(order));
        break;
      case PairClass::far:
        slot = std::make_unique<PanelPairRule>(far_rule(order));
        break;
      default:
        throw Error("panel_quadrature: unsupported pair class");
    }
  }
  return *slot;
}

}  // namespace mortar
