#include <doctest.h>

#include <cmath>

#include "mortar/coupling.hpp"
#include "mortar/manufactured.hpp"
#include "mortar/solver.hpp"

using namespace mortar;

namespace
{

BlockSystem tc1_system(int level, double multiplier)
{
  const auto d = make_discretization(std::make_shared<VolumeMesh>(cube_mesh(1.0, 2 << level)), 1);
  return assemble_block_system(make_tc1(multiplier * std::sqrt(3.0) * pi), d);
}

double rel(const CVector &a, const CVector &b) { return (a - b).norm() / b.norm(); }

// nV = nW = nZ = 2 with identity diagonal blocks and zero couplings.
BlockSystem toy_system()
{
  BlockSystem s;
  s.k = 1.0;
  s.nV = s.nW = s.nZ = 2;
  s.A = CSparse(2, 2);
  s.A.setIdentity();
  s.B1 = CSparse(2, 2);
  s.B4 = CSparse(2, 2);
  s.B2 = CMatrix::Zero(2, 2);
  s.B3 = CMatrix::Identity(2, 2);
  s.B5 = CMatrix::Identity(2, 2);
  s.B6 = CMatrix::Zero(2, 2);
  s.f = CVector::Constant(2, cplx(1.0, 2.0));
  s.r2 = CVector::Constant(2, cplx(-3.0, 0.5));
  s.r3 = CVector::Constant(2, cplx(0.25, 0.0));
  return s;
}

}  // namespace

TEST_CASE("toy system")
{
  const BlockSystem s = toy_system();
  const SolutionTriple x = direct_solve(s);
  CHECK(x.u == s.f);
  CHECK(x.m == s.r3);
  CHECK(x.uext == s.r2);
  CHECK(rel(schur_solve(s).stacked(), x.stacked()) < 1e-15);
  CHECK_THROWS_AS(direct_solve(s, 5), Error);

  BlockSystem singular = s;
  singular.B5.setZero();
  CHECK_THROWS_AS(direct_solve(singular), SingularMatrixError);
  CHECK_THROWS_AS(schur_solve(singular), SingularMatrixError);
}

TEST_CASE("zero right-hand side")
{
  BlockSystem s = tc1_system(0, 1.5);
  s.f.setZero();
  s.r2.setZero();
  s.r3.setZero();
  CHECK(schur_solve(s).stacked().norm() == 0.0);
  CHECK(direct_solve(s).stacked().norm() == 0.0);
}

TEST_CASE("direct and Schur solves")
{
  const BlockSystem s0 = tc1_system(0, 1.5);
  const SolutionTriple d0 = direct_solve(s0);
  CHECK(d0.residual <= 1e-12);
  CHECK(relative_residual(s0, d0) == d0.residual);

  const BlockSystem s1 = tc1_system(1, 1.5);
  const SolutionTriple a = schur_solve(s1), b = direct_solve(s1);
  CHECK(rel(a.stacked(), b.stacked()) <= 1e-8);
  CHECK(a.residual <= 1e-10);
  CHECK(a.u.size() == s1.nV);
  CHECK(a.m.size() == s1.nW);
  CHECK(a.uext.size() == s1.nZ);

  // Bit-identical repeats.
  CHECK(schur_solve(s1).stacked() == a.stacked());
}

TEST_CASE("GMRES")
{
  const BlockSystem s = tc1_system(0, 1.5);
  const SolutionTriple lu = direct_solve(s);
  GmresOptions o;
  CHECK(o.tol == 1e-8);
  CHECK(o.maxit == 2000);
  CHECK(o.preconditioned);
  const SolutionTriple g = gmres_solve(s, o);
  CHECK(rel(g.stacked(), lu.stacked()) <= 1e-6);
  CHECK(g.iterations > 0);

  GmresOptions loose = o;
  loose.tol = 1e-1;
  CHECK(gmres_solve(s, loose).iterations < g.iterations);

  GmresOptions plain = o;
  plain.preconditioned = false;
  const SolutionTriple gp = gmres_solve(s, plain);
  CHECK(rel(gp.stacked(), lu.stacked()) <= 1e-6);
  CHECK(gp.iterations > g.iterations);

  GmresOptions starved = o;
  starved.maxit = 2;
  CHECK_THROWS_AS(gmres_solve(s, starved), Error);
}

TEST_CASE("interior Dirichlet eigenvalue wavenumber")
{
  // k = 3 sqrt(3) pi is a Dirichlet eigenvalue of the unit cube.
  const BlockSystem s = tc1_system(2, 3.0);
  CHECK(std::isfinite(condition_estimate(s.A)));
  const SolutionTriple x = schur_solve(s);
  CHECK(x.residual <= 1e-10);
}
