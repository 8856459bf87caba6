// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/lagrange.hpp"

#include "mortar/types.hpp"

namespace mortar
{

namespace
{

// prod_{j < a} (p * l - j) / (j + 1) and its derivative with respect to l.
inline void factor(int p, int a, double l, double &value, double &deriv)
{
  value = 1.0;
  deriv = 0.0;
  for (int j = 0; j < a; j++)
  {
    const double t = (p * l - j) / (j + 1.0);
    const double dt = p / (j + 1.0);
    deriv = deriv * t + value * dt;
    value *= t;
  }
}

}  // namespace

int lagrange_count(int dim, int degree)
{
  return dim == 2 ? (degree + 1) * (degree + 2) / 2
                  : (degree + 1) * (degree + 2) * (degree + 3) / 6;
}

SimplexLagrange::SimplexLagrange(int dim, int degree) : dim_(dim), degree_(degree)
{
  if (dim != 2 && dim != 3)
  {
    throw Error("SimplexLagrange: dimension must be 2 or 3");
  }
  if (degree < 0 || degree > 3)
  {
    throw Error("SimplexLagrange: unsupported degree " + std::to_string(degree));
  }
  // Vertices first, then edges, faces and interior, so that low-dimensional entities come
  // first in every element's local numbering.
  std::vector<std::array<int, 4>> all;
  const int p = degree;
  if (dim == 2)
  {
    for (int a = p; a >= 0; a--)
    {
      for (int b = p - a; b >= 0; b--)
      {
        all.push_back({a, b, p - a - b, 0});
      }
    }
  }
  else
  {
    for (int a = p; a >= 0; a--)
    {
      for (int b = p - a; b >= 0; b--)
      {
        for (int c = p - a - b; c >= 0; c--)
        {
          all.push_back({a, b, c, p - a - b - c});
        }
      }
    }
  }
  auto support = [&](const std::array<int, 4> &m)
  {
    int s = 0;
    for (int j = 0; j <= dim; j++)
    {
      s += m[j] > 0;
    }
    return s;
  };
  for (int s = 1; s <= dim + 1; s++)
  {
    for (const auto &m : all)
    {
      if (support(m) == s || (p == 0 && s == 1))
      {
        indices_.push_back(m);
      }
    }
    if (p == 0)
    {
      break;
    }
  }
}

std::array<double, 4> SimplexLagrange::node(int i) const
{
  std::array<double, 4> l{0.0, 0.0, 0.0, 0.0};
  if (degree_ == 0)
  {
    for (int j = 0; j <= dim_; j++)
    {
      l[j] = 1.0 / (dim_ + 1);
    }
    return l;
  }
  for (int j = 0; j <= dim_; j++)
  {
    l[j] = static_cast<double>(indices_[i][j]) / degree_;
  }
  return l;
}

void SimplexLagrange::eval(const double *lambda, double *values) const
{
  const int n = size();
  for (int i = 0; i < n; i++)
  {
    double v = 1.0;
    for (int j = 0; j <= dim_; j++)
    {
      double f, df;
      factor(degree_, indices_[i][j], lambda[j], f, df);
      v *= f;
    }
    values[i] = v;
  }
}

void SimplexLagrange::eval_dlambda(const double *lambda, double *grads) const
{
  const int n = size();
  const int m = dim_ + 1;
  for (int i = 0; i < n; i++)
  {
    double f[4], df[4];
    for (int j = 0; j < m; j++)
    {
      factor(degree_, indices_[i][j], lambda[j], f[j], df[j]);
    }
    for (int j = 0; j < m; j++)
    {
      double g = df[j];
      for (int l = 0; l < m; l++)
      {
        if (l != j)
        {
          g *= f[l];
        }
      }
      grads[i * m + j] = g;
    }
  }
}

}  // namespace mortar
