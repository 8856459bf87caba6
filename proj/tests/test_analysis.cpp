#include <doctest.h>

#include <cmath>

#include "mortar/analysis.hpp"
#include "mortar/coupling.hpp"
#include "mortar/manufactured.hpp"
#include "mortar/solver.hpp"

using namespace mortar;

namespace
{

Discretization cube_disc(int level, int p)
{
  return make_discretization(std::make_shared<VolumeMesh>(cube_mesh(1.0, 2 << level)), p);
}

}  // namespace

TEST_CASE("convergence_rate")
{
  CHECK(convergence_rate({1.0, 0.5}, {1.0, 0.5}).consecutive[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(convergence_rate({1.0, 0.5}, {1.0, 0.25}).consecutive[0] == doctest::Approx(2.0).epsilon(1e-15));
  std::vector<double> h, e;
  for (int i = 0; i < 5; i++)
  {
    h.push_back(0.7 * std::pow(0.6, i));
    e.push_back(3.1 * std::pow(h.back(), 1.5));
  }
  const RateEstimate r = convergence_rate(h, e);
  CHECK(std::abs(r.least_squares - 1.5) <= 1e-12);
  CHECK(r.consecutive.size() == 4);
  CHECK_THROWS_AS(convergence_rate({1.0, 0.5, 0.5}, {1.0, 0.5, 0.2}), Error);
  CHECK_THROWS_AS(convergence_rate({0.5, 1.0}, {1.0, 0.5}), Error);
  CHECK_THROWS_AS(convergence_rate({1.0}, {1.0}), Error);
}

TEST_CASE("polynomial case is reproduced")
{
  for (int p = 1; p <= 3; p++)
  {
    CAPTURE(p);
    const Discretization d = cube_disc(0, p);
    const ManufacturedCase mc = make_poly_exact(2.0, p);
    const BlockSystem sys = assemble_block_system(mc, d);
    const ErrorReport e = compute_errors(schur_solve(sys), mc, d);
    CHECK(e.l2_omega <= 1e-10);
    CHECK(e.h1_omega <= 1e-10);
    CHECK(e.mortar <= 1e-10);
    CHECK(e.trace <= 1e-10);
  }
}

TEST_CASE("errors of tc1 on level 1")
{
  const double k = 1.5 * std::sqrt(3.0) * pi;
  const ManufacturedCase mc = make_tc1(k);
  const Discretization d = cube_disc(1, 1);
  const SolutionTriple x = schur_solve(assemble_block_system(mc, d));
  const ErrorReport g = compute_errors(x, mc, d);
  for (double v : {g.l2_omega, g.h1_omega, g.mortar, g.trace})
  {
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
  }
  CHECK(g.h == doctest::Approx(std::sqrt(3.0) / 4.0));
  CHECK(g.p == 1);
  CHECK(g.residual == x.residual);

  SUBCASE("quadrature saturation")
  {
    const ErrorReport fine = compute_errors(x, mc, d, 28);
    CHECK(std::abs(fine.l2_omega - g.l2_omega) < 1e-8 * g.l2_omega);
    CHECK(std::abs(fine.h1_omega - g.h1_omega) < 1e-8 * g.h1_omega);
    CHECK(std::abs(fine.mortar - g.mortar) < 1e-8 * g.mortar);
    CHECK(std::abs(fine.trace - g.trace) < 1e-8 * g.trace);
  }

  SUBCASE("rates from reports")
  {
    ErrorReport coarse = g;
    coarse.h = 2.0 * g.h;
    coarse.h1_omega = 2.0 * g.h1_omega;
    const ConvergenceRates r = convergence_rates({coarse, g});
    CHECK(r.h1_omega.consecutive[0] == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("interpolation errors bound the Galerkin errors from below")
{
  // Level 2: on level 1 the nodal interpolant is still coarse enough to lose to the Galerkin
  // solution in the H1 seminorm.
  const ManufacturedCase mc = make_tc1(1.5 * std::sqrt(3.0) * pi);
  const Discretization d = cube_disc(2, 1);
  const ErrorReport g = compute_errors(schur_solve(assemble_block_system(mc, d)), mc, d);
  const ErrorReport i = compute_errors(interpolate_exact(mc, d), mc, d);
  CHECK(i.l2_omega < g.l2_omega);
  CHECK(i.h1_omega < g.h1_omega);
  CHECK(i.mortar < g.mortar);
  CHECK(i.trace < g.trace);
}

TEST_CASE("zero exact norms are rejected")
{
  const Discretization d = cube_disc(0, 1);
  const ManufacturedCase z = make_zero_case(1.0);
  SolutionTriple x = interpolate_exact(z, d);
  CHECK_THROWS_AS(compute_errors(x, z, d), Error);
}

TEST_CASE("energy identity probe")
{
  const Discretization d = cube_disc(0, 1);
  const SystemParts p0 = assemble_parts(MediumCoefficients::homogeneous(0.0), d, {});
  const CMatrix T0 = assemble_T_matrix(p0, d);
  CHECK(energy_identity_probe(T0, p0.interior.S, p0.ops.V_ww, p0.ops.W_zz, 50) <= 1e-10);
  const CMatrix T1 = assemble_T_matrix(0.1, MediumCoefficients::homogeneous(0.1), d);
  CHECK(energy_identity_probe(T1, p0.interior.S, p0.ops.V_ww, p0.ops.W_zz, 50) > 1e-4);
  CHECK_THROWS_WITH_AS(energy_identity_probe(T0, p0.interior.S, p0.ops.V_ww, p0.ops.W_zz, 0),
                       doctest::Contains("no trials"), Error);
  CHECK_THROWS_AS(energy_identity_probe(CMatrix(T0.leftCols(T0.cols() - 1)), p0.interior.S,
                                        p0.ops.V_ww, p0.ops.W_zz, 5),
                  Error);
}
