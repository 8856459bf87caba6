// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_ANALYSIS_HPP
#define MORTAR_ANALYSIS_HPP

#include <cstdint>
#include <vector>

#include "mortar/coupling.hpp"
#include "mortar/solver.hpp"

namespace mortar
{

//
// Relative errors of a computed triple against the closed-form fields:
//   l2_omega      ||u - u_h||_0 / ||u||_0
//   h1_omega      |u - u_h|_1 / |u|_1
//   mortar        h^{1/2} ||m - m_h||_{0,Gamma} / ||m||_{0,Gamma}
//   trace         h^{-1/2} ||uext - uext_h||_{0,Gamma} / ||uext||_{0,Gamma}
// When the case has a zero exterior field, `trace` is the absolute scaled norm; for a
// constant interior field `h1_omega` is the absolute seminorm.
//
struct ErrorReport
{
  double h = 0.0;
  int p = 1;
  double k = 0.0;
  double l2_omega = 0.0;
  double h1_omega = 0.0;
  double mortar = 0.0;
  double trace = 0.0;
  // Solver statistics copied from the triple.
  std::string solver;
  double residual = 0.0;
  int iterations = 0;
  double seconds = 0.0;
};

// Norms use volume and surface rules of degree `order`; order < 0 selects max(2p + 2, 14).
// Volume degrees above 14 become composite rules on refined sub-tets, surface degrees are
// capped at 30. Throws Error when an exact norm vanishes.
ErrorReport compute_errors(const SolutionTriple &x, const ManufacturedCase &mcase,
                           const Discretization &disc, int order = -1);

// Interpolant of the exact fields: nodal in V_h and Z_h, L2 projection in W_h.
SolutionTriple interpolate_exact(const ManufacturedCase &mcase, const Discretization &disc);

// Rates of one error quantity.
struct RateEstimate
{
  std::vector<double> consecutive;  // log(e_i / e_{i+1}) / log(h_i / h_{i+1})
  double least_squares = 0.0;       // slope of log e against log h
};

// Throws Error unless there are at least two values and h strictly decreases.
RateEstimate convergence_rate(const std::vector<double> &h, const std::vector<double> &e);

struct ConvergenceRates
{
  RateEstimate l2_omega, h1_omega, mortar, trace;
};
ConvergenceRates convergence_rates(const std::vector<ErrorReport> &reports);

//
// Largest relative gap between x^H T x and |A^{1/2} grad u|^2 + <W uext, uext> +
// <V m, m> over random real triples (the identity holds for real coefficient vectors; for
// complex ones the coupling terms contribute a purely imaginary part). T, S, V and W must
// be assembled at k = 0 on the same spaces. Throws Error "no trials" for trials <= 0.
//
double energy_identity_probe(const CMatrix &T, const CSparse &S, const CMatrix &V_ww,
                             const CMatrix &W_zz, int trials, std::uint64_t seed = 1);

// Smallest real part of x^H T x / |x|^2 over random complex triples.
double min_real_quadratic_form(const CMatrix &T, int trials, std::uint64_t seed = 1);

}  // namespace mortar

#endif  // MORTAR_ANALYSIS_HPP
