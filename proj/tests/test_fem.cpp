#include <doctest.h>

#include <cmath>

#include "mortar/fe_space.hpp"
#include "mortar/fem_assembly.hpp"
#include "mortar/lagrange.hpp"
#include "mortar/parallel.hpp"
#include "mortar/quadrature.hpp"

using namespace mortar;

namespace
{

std::shared_ptr<VolumeMesh> single_tet(double scale = 1.0)
{
  auto m = std::make_shared<VolumeMesh>();
  m->vertices = {Vec3(0, 0, 0), Vec3(scale, 0, 0), Vec3(0, scale, 0), Vec3(0, 0, scale)};
  m->tets = {{0, 1, 2, 3}};
  m->region = {0};
  return m;
}

std::shared_ptr<VolumeMesh> cube(int n) { return std::make_shared<VolumeMesh>(cube_mesh(1.0, n)); }

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

double rel_diff(const CSparse &a, const CSparse &b)
{
  return CSparse(a - b).norm() / std::max(1e-300, a.norm());
}

}  // namespace

TEST_CASE("volume_quadrature")
{
  const TetRule r1 = volume_quadrature(1);
  CHECK(r1.size() == 1);
  CHECK(r1.weights[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(r1.points[0][0] == doctest::Approx(0.25));

  for (int order = 0; order <= 14; order++)
  {
    CAPTURE(order);
    const TetRule r = volume_quadrature(order);
    double sum = 0.0;
    for (double w : r.weights)
    {
      CHECK(w > 0.0);
      sum += w;
    }
    CHECK(sum == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    // Every monomial x^a y^b z^c of total degree <= order against a! b! c! / (a+b+c+3)!.
    for (int a = 0; a <= order; a++)
    {
      for (int b = 0; a + b <= order; b++)
      {
        for (int c = 0; a + b + c <= order; c++)
        {
          double q = 0.0;
          for (std::size_t i = 0; i < r.size(); i++)
          {
            q += r.weights[i] * std::pow(r.points[i][0], a) * std::pow(r.points[i][1], b) *
                 std::pow(r.points[i][2], c);
          }
          const double exact = factorial(a) * factorial(b) * factorial(c) / factorial(a + b + c + 3);
          CHECK(q == doctest::Approx(exact).epsilon(1e-12));
        }
      }
    }
  }
  double x = 0.0;
  const TetRule r = volume_quadrature(1);
  for (std::size_t i = 0; i < r.size(); i++)
  {
    x += r.weights[i] * r.points[i][0];
  }
  CHECK(x == doctest::Approx(1.0 / 24.0).epsilon(1e-15));
  CHECK_THROWS_AS(volume_quadrature(15), Error);
  CHECK_THROWS_AS(volume_quadrature(-1), Error);
}

TEST_CASE("triangle and line rules")
{
  for (int degree = 0; degree <= 30; degree++)
  {
    const TriangleRule r = triangle_rule(degree);
    for (int a = 0; a <= degree; a++)
    {
      for (int b = 0; a + b <= degree; b++)
      {
        double q = 0.0;
        for (std::size_t i = 0; i < r.size(); i++)
        {
          q += r.weights[i] * std::pow(r.points[i][0], a) * std::pow(r.points[i][1], b);
        }
        CHECK(q == doctest::Approx(factorial(a) * factorial(b) / factorial(a + b + 2)).epsilon(1e-12));
      }
    }
  }
  const LineRule g = gauss_legendre(5);
  double s = 0.0;
  for (std::size_t i = 0; i < g.points.size(); i++)
  {
    s += g.weights[i] * std::pow(g.points[i], 9);
  }
  CHECK(s == doctest::Approx(0.1).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_legendre(0), Error);
}

TEST_CASE("Lagrange basis is nodal")
{
  for (int dim : {2, 3})
  {
    for (int p = 0; p <= 3; p++)
    {
      const SimplexLagrange b(dim, p);
      CHECK(b.size() == lagrange_count(dim, p));
      std::vector<double> values(b.size());
      for (int i = 0; i < b.size(); i++)
      {
        const auto node = b.node(i);
        b.eval(node.data(), values.data());
        for (int j = 0; j < b.size(); j++)
        {
          CHECK(values[j] == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-13));
        }
      }
    }
  }
  CHECK(lagrange_count(3, 2) == 10);
  CHECK(lagrange_count(2, 3) == 10);
}

TEST_CASE("build_fe_space")
{
  CHECK(build_fe_space(single_tet(), 1).num_dofs() == 4);
  CHECK(build_fe_space(single_tet(), 2).num_dofs() == 10);
  CHECK(build_fe_space(single_tet(), 3).num_dofs() == 20);
  CHECK(build_fe_space(cube(1), 1).num_dofs() == 8);
  // (2n+1)^3 nodes for p = 2 on the n^3 cube.
  CHECK(build_fe_space(cube(2), 2).num_dofs() == 125);
  CHECK(build_fe_space(cube(2), 3).num_dofs() == 343);
  CHECK_THROWS_AS(build_fe_space(cube(1), 0), Error);
  CHECK_THROWS_AS(build_fe_space(cube(1), 4), Error);

  SUBCASE("boundary dofs")
  {
    const FESpace s = build_fe_space(cube(2), 2);
    // All nodes but the 3^3 interior ones.
    CHECK(s.boundary_dofs.size() == 125 - 27);
    for (int d : s.boundary_dofs)
    {
      CHECK(s.dof_points[d].cwiseAbs().maxCoeff() == doctest::Approx(0.5));
    }
  }

  SUBCASE("conformity: interpolants of degree-p polynomials are exact everywhere")
  {
    for (int p = 1; p <= 3; p++)
    {
      const FESpace s = build_fe_space(cube(2), p);
      auto f = [p](const Vec3 &x)
      { return cplx(std::pow(x[0] + 0.3, p) - x[1] * std::pow(x[2], p - 1), std::pow(x[2], p)); };
      const CVector u = interpolate(s, f);
      const double lam[4] = {0.1, 0.2, 0.3, 0.4};
      for (std::size_t t = 0; t < s.mesh->num_tets(); t++)
      {
        const auto &tv = s.mesh->tets[t];
        Vec3 x = Vec3::Zero();
        for (int a = 0; a < 4; a++)
        {
          x += lam[a] * s.mesh->vertices[tv[a]];
        }
        CHECK(std::abs(evaluate(s, u, t, lam) - f(x)) < 1e-12);
      }
    }
  }
}

TEST_CASE("assemble_interior on a single tet")
{
  const auto tet = single_tet(0.7);
  const FESpace s = build_fe_space(tet, 1);
  const double V = tet->volume();
  const InteriorMatrices m = assemble_interior(s, MediumCoefficients::homogeneous(1.0));
  const CMatrix S = CMatrix(m.S), M = CMatrix(m.M);
  for (int i = 0; i < 4; i++)
  {
    CHECK(std::abs(S.row(i).sum()) < 1e-14);
    for (int j = 0; j < 4; j++)
    {
      CHECK(std::abs(M(i, j) - (i == j ? V / 10.0 : V / 20.0)) < 1e-15);
    }
  }
}

TEST_CASE("assemble_interior properties")
{
  const auto mesh = cube(4);
  MediumCoefficients c = MediumCoefficients::homogeneous(2.0);
  // Complex index and larger diffusion on the central cells, away from the boundary.
  auto center = [](const Vec3 &x) { return x.cwiseAbs().maxCoeff() < 0.25; };
  c.refraction = [center](const Vec3 &x, int) { return center(x) ? cplx(1.0, 0.3) : cplx(1.0); };
  c.diffusion = [center](const Vec3 &x, int) { return center(x) ? 1.5 : 1.0; };
  c.alpha_max = 1.5;
  const FESpace s = build_fe_space(mesh, 2);
  const InteriorMatrices m = assemble_interior(s, c);
  CHECK(rel_diff(m.S, CSparse(m.S.transpose())) < 1e-14);
  CHECK(rel_diff(m.M, CSparse(m.M.transpose())) < 1e-14);
  CHECK(rel_diff(m.R, CSparse(m.R.transpose())) < 1e-14);
  CHECK(rel_diff(m.S, CSparse(m.S.adjoint())) < 1e-14);
  CHECK(rel_diff(m.R, CSparse(m.R.adjoint())) < 1e-14);
  CHECK(rel_diff(m.M, CSparse(m.M.adjoint())) > 1e-3);

  const InteriorMatrices h = assemble_interior(s, MediumCoefficients::homogeneous(2.0));
  CHECK(rel_diff(h.M, CSparse(h.M.adjoint())) < 1e-14);

  SUBCASE("R lives on boundary dofs")
  {
    std::vector<char> on(s.num_dofs(), 0);
    for (int d : s.boundary_dofs)
    {
      on[d] = 1;
    }
    for (int k = 0; k < m.R.outerSize(); k++)
    {
      for (CSparse::InnerIterator it(m.R, k); it; ++it)
      {
        if (std::abs(it.value()) > 0.0)
        {
          CHECK(on[it.row()]);
          CHECK(on[it.col()]);
        }
      }
    }
    // Surface area from R: 1^T R 1 = |Gamma|.
    const CVector one = CVector::Ones(s.num_dofs());
    CHECK(std::abs(one.dot(m.R * one) - 6.0) < 1e-12);
  }

  SUBCASE("impedance block")
  {
    const CSparse A = m.impedance_block(2.0);
    CHECK(rel_diff(A, CSparse(m.S - m.M + cplx(0.0, 2.0) * m.R)) < 1e-15);
  }
}

TEST_CASE("Dirichlet energy of polynomial interpolants is exact")
{
  // u = x^2 + 2yz - z^2: grad = (2x, 2z, 2y - 2z); |grad|^2 integrated over the unit cube.
  const FESpace s = build_fe_space(cube(2), 2);
  const CVector u = interpolate(s, [](const Vec3 &x)
                                { return cplx(x[0] * x[0] + 2.0 * x[1] * x[2] - x[2] * x[2]); });
  const InteriorMatrices m = assemble_interior(s, MediumCoefficients::homogeneous(1.0));
  const cplx energy = u.dot(m.S * u);
  // int 4x^2 + 4z^2 + 4(y - z)^2 over (-1/2, 1/2)^3 = 4/12 + 4/12 + 4 * 2/12.
  CHECK(std::abs(energy - 4.0 / 3.0) < 1e-12);
}

TEST_CASE("coefficient violations are reported with their location")
{
  const auto mesh = cube(2);
  MediumCoefficients c = MediumCoefficients::homogeneous(1.0);
  c.diffusion = [](const Vec3 &, int) { return 2.0; };
  c.alpha_max = 2.0;
  CHECK_THROWS_WITH_AS(assemble_interior(build_fe_space(mesh, 1), c),
                       doctest::Contains("next to the coupling boundary"), Error);
  c.diffusion = [](const Vec3 &, int) { return 3.0; };
  CHECK_THROWS_WITH_AS(assemble_interior(build_fe_space(mesh, 1), c), doctest::Contains(" at ("),
                       Error);
  MediumCoefficients neg = MediumCoefficients::homogeneous(-1.0);
  CHECK_THROWS_AS(assemble_interior(build_fe_space(mesh, 1), neg), Error);
}

TEST_CASE("assemble_load")
{
  const auto tet = single_tet();
  const FESpace s = build_fe_space(tet, 1);
  const CVector zero = assemble_load(s, [](const Vec3 &, int) { return cplx(0.0); });
  CHECK(zero.norm() == 0.0);
  const CVector one = assemble_load(s, [](const Vec3 &, int) { return cplx(1.0); });
  for (int i = 0; i < 4; i++)
  {
    CHECK(std::abs(one[i] - 1.0 / 24.0) < 1e-15);
  }
  const FESpace c2 = build_fe_space(cube(2), 2);
  auto f = [](const Vec3 &x, int) { return cplx(std::sin(x[0]), x[1] * x[2]); };
  const cplx alpha(0.3, -1.7);
  const CVector a = assemble_load(c2, [&](const Vec3 &x, int r) { return alpha * f(x, r); });
  const CVector b = alpha * assemble_load(c2, f);
  CHECK((a - b).norm() <= 1e-15 * b.norm());
}

TEST_CASE("parallel assembly matches the single-threaded reference")
{
  const FESpace s = build_fe_space(cube(3), 2);
  set_num_threads(1);
  const InteriorMatrices a = assemble_interior(s, MediumCoefficients::homogeneous(3.0));
  set_num_threads(4);
  const InteriorMatrices b = assemble_interior(s, MediumCoefficients::homogeneous(3.0));
  set_num_threads(1);
  CHECK(rel_diff(a.S, b.S) <= 1e-12);
  CHECK(rel_diff(a.M, b.M) <= 1e-12);
  CHECK(rel_diff(a.R, b.R) <= 1e-12);
}
