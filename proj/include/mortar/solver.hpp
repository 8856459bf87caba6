// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_SOLVER_HPP
#define MORTAR_SOLVER_HPP

#include <string>

#include "mortar/coupling.hpp"

namespace mortar
{

struct SolutionTriple
{
  CVector u, m, uext;
  std::string solver;
  double residual = 0.0;  // ||K x - b|| / ||b||, recomputed with an independent matvec
  int iterations = 0;     // GMRES iterations, 0 for direct solvers
  int factorizations = 0;
  double seconds = 0.0;

  CVector stacked() const;
};

// ||K x - b|| / ||b|| (or ||K x|| when b = 0).
double relative_residual(const BlockSystem &system, const SolutionTriple &x);

//
// Eliminates u = A^{-1}(f - B1 m) with a sparse LU of A and solves the reduced boundary
// system
//   [ B2                B3 ] [m   ]   [r2              ]
//   [ B5 - B4 A^-1 B1   B6 ] [uext] = [r3 - B4 A^-1 f  ]
// by dense partial-pivoting LU. Only the boundary block of A^{-1} is formed since B1 and
// B4 touch boundary nodes only. Throws SingularMatrixError on a vanishing pivot.
//
SolutionTriple schur_solve(const BlockSystem &system);

// Dense LU of the assembled block matrix. Throws when size() exceeds max_size.
SolutionTriple direct_solve(const BlockSystem &system, int max_size = 20000);

//
// Restarted GMRES on the reduced boundary system, unknowns ordered (uext, m). By default it
// is right-preconditioned, block diagonal with exact LU factors of B3 and of the reduced
// (m, m) block; without it the tol 1e-8 residual leaves about 2e-6 error on level 1. Throws Error when the relative residual does not reach tol within maxit
// iterations.
//
struct GmresOptions
{
  double tol = 1e-8;
  int maxit = 2000;
  int restart = 300;
  bool preconditioned = true;
};
SolutionTriple gmres_solve(const BlockSystem &system, const GmresOptions &options = {});

// One-norm condition estimate of a sparse matrix (Hager's method on its LU factors).
double condition_estimate(const CSparse &A);

}  // namespace mortar

#endif  // MORTAR_SOLVER_HPP
