// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include <Eigen/Eigenvalues>

#include "mortar/types.hpp"

namespace mortar
{

namespace
{

// Golub-Welsch on [-1, 1] for the weight (1 - x)^alpha (1 + x)^beta, mapped to [0, 1].
LineRule golub_welsch_jacobi(int n, double alpha, double beta)
{
  if (n < 1)
  {
    throw Error("quadrature: number of points must be positive");
  }
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  const double ab = alpha + beta;
  for (int i = 0; i < n; i++)
  {
    if (i == 0)
    {
      J(0, 0) = (beta - alpha) / (ab + 2.0);
    }
    else
    {
      const double s = 2.0 * i + ab;
      J(i, i) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    if (i + 1 < n)
    {
      const double m = i + 1.0;
      const double s = 2.0 * m + ab;
      const double num = 4.0 * m * (m + alpha) * (m + beta) * (m + ab);
      const double den = s * s * (s + 1.0) * (s - 1.0);
      J(i, i + 1) = J(i + 1, i) = std::sqrt(num / den);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(J);
  LineRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  double total = 0.0;
  for (int i = 0; i < n; i++)
  {
    const double v0 = eig.eigenvectors()(0, i);
    rule.points[i] = 0.5 * (eig.eigenvalues()(i) + 1.0);
    rule.weights[i] = v0 * v0;
    total += rule.weights[i];
  }
  // Integral of (1 - t)^alpha t^beta over [0, 1] for beta = 0.
  const double mass = 1.0 / (alpha + 1.0);
  for (auto &w : rule.weights)
  {
    w *= mass / total;
  }
  return rule;
}

}  // namespace

LineRule gauss_legendre(int n)
{
  return golub_welsch_jacobi(n, 0.0, 0.0);
}

LineRule gauss_jacobi(int n, int alpha)
{
  if (alpha < 0)
  {
    throw Error("quadrature: Jacobi exponent must be nonnegative");
  }
  return golub_welsch_jacobi(n, alpha, 0.0);
}

TriangleRule triangle_rule_points(int n)
{
  static std::mutex mutex;
  static std::map<int, TriangleRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end())
  {
    return it->second;
  }
  const auto ru = gauss_jacobi(n, 1);
  const auto rv = gauss_legendre(n);
  TriangleRule rule;
  for (int i = 0; i < n; i++)
  {
    for (int j = 0; j < n; j++)
    {
      const double u = ru.points[i];
      rule.points.push_back({u, (1.0 - u) * rv.points[j]});
      rule.weights.push_back(ru.weights[i] * rv.weights[j]);
    }
  }
  cache.emplace(n, rule);
  return rule;
}

TriangleRule triangle_rule(int degree)
{
  if (degree < 0 || degree > 30)
  {
    throw Error("triangle_rule: unsupported degree " + std::to_string(degree));
  }
  return triangle_rule_points(degree / 2 + 1);
}

TetRule volume_quadrature(int degree)
{
  if (degree < 0 || degree > 14)
  {
    throw Error("volume_quadrature: unsupported order " + std::to_string(degree));
  }
  static std::mutex mutex;
  static std::map<int, TetRule> cache;
  const int n = degree / 2 + 1;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end())
  {
    return it->second;
  }
  const auto ru = gauss_jacobi(n, 2);
  const auto rv = gauss_jacobi(n, 1);
  const auto rw = gauss_legendre(n);
  TetRule rule;
  for (int i = 0; i < n; i++)
  {
    for (int j = 0; j < n; j++)
    {
      for (int l = 0; l < n; l++)
      {
        const double u = ru.points[i], v = rv.points[j], w = rw.points[l];
        rule.points.push_back({u, (1.0 - u) * v, (1.0 - u) * (1.0 - v) * w});
        rule.weights.push_back(ru.weights[i] * rv.weights[j] * rw.weights[l]);
      }
    }
  }
  cache.emplace(n, rule);
  return rule;
}

}  // namespace mortar
