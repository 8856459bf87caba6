// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_LAGRANGE_HPP
#define MORTAR_LAGRANGE_HPP

#include <array>
#include <vector>

namespace mortar
{

//
// Equispaced Lagrange basis of degree p on a simplex of dimension 2 or 3, written in
// barycentric coordinates. Node i sits at sum_j index[i][j] / p * vertex_j; for p = 0 the
// single node is the centroid and the basis function is the constant 1.
//
class SimplexLagrange
{
public:
  SimplexLagrange(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(indices_.size()); }

  // Multi-index of node i (dim + 1 entries, unused tail is zero).
  const std::array<int, 4> &index(int i) const { return indices_[i]; }

  // Barycentric coordinates of node i.
  std::array<double, 4> node(int i) const;

  // Values of all basis functions at barycentric point `lambda`.
  void eval(const double *lambda, double *values) const;

  // Derivatives d phi_i / d lambda_j, stored row-major as grads[i * (dim + 1) + j].
  void eval_dlambda(const double *lambda, double *grads) const;

private:
  int dim_, degree_;
  std::vector<std::array<int, 4>> indices_;
};

// Number of Lagrange nodes of degree p on a simplex of dimension dim.
int lagrange_count(int dim, int degree);

}  // namespace mortar

#endif  // MORTAR_LAGRANGE_HPP
