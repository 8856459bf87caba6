// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_VERIFY_HPP
#define MORTAR_VERIFY_HPP

#include <string>
#include <vector>

#include "mortar/bem_operators.hpp"

namespace mortar
{

// One measured quantity against its threshold. `series` holds the sequence when the check
// is about a trend (quadrature refinement, mesh refinement).
struct Check
{
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::vector<double> series;
  std::string detail;
};

struct SuiteReport
{
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
};

// kernels, jumps, calderon, energy-k0, conventions.
const std::vector<std::string> &suite_names();

// Throws ConfigError for an unknown suite.
SuiteReport run_suite(const std::string &name);

//
// Offset-probe estimates of the four jump relations at panel centroids of the level-0
// cube surface, one value per refinement step (offset divided by 4, potential quadrature
// refined). Each entry is the maximum over the probe points of
//   [V phi]           relative to |V phi|
//   [dn V phi] - phi  relative to |phi|
//   [K psi] + psi     relative to |psi|
//   [dn K psi]        relative to |dn K psi|
// with [f] = interior limit - exterior limit. One-sided limits are linearly extrapolated
// from the offsets e and 2e.
//
struct JumpSeries
{
  std::vector<double> v, dn_v, k, dn_k;
};
JumpSeries jump_probe_series(double k, int steps);

// Calderon residual max(r1, r2) of field traces on the cube meshes of the given levels at
// k = 1.5 sqrt(3) pi: the radiating exp(ikr)/r centered at the origin and the plane wave
// exp(ik x1), which does not satisfy the exterior identities.
struct CalderonSeries
{
  std::vector<double> radiating, plane_wave;
};
CalderonSeries calderon_series(const std::vector<int> &levels, const BemQuadrature &quad = {});

}  // namespace mortar

#endif  // MORTAR_VERIFY_HPP
