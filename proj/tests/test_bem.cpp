#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include <Eigen/Eigenvalues>

#include "mortar/bem_operators.hpp"
#include "mortar/calderon.hpp"
#include "mortar/kernel.hpp"
#include "mortar/panel_quadrature.hpp"
#include "mortar/potentials.hpp"
#include "mortar/trace_spaces.hpp"

using namespace mortar;

namespace
{

// Subdivided icosahedron projected onto the unit sphere.
std::shared_ptr<SurfaceMesh> icosphere(int levels)
{
  const double g = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> v = {{-1, g, 0}, {1, g, 0}, {-1, -g, 0}, {1, -g, 0}, {0, -1, g}, {0, 1, g},
                         {0, -1, -g}, {0, 1, -g}, {g, 0, -1}, {g, 0, 1}, {-g, 0, -1}, {-g, 0, 1}};
  std::vector<std::array<int, 3>> f = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                                       {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                                       {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                                       {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (auto &x : v)
  {
    x.normalize();
  }
  for (int l = 0; l < levels; l++)
  {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b)
    {
      const auto key = std::make_pair(std::min(a, b), std::max(a, b));
      auto it = mid.find(key);
      if (it != mid.end())
      {
        return it->second;
      }
      v.push_back((v[a] + v[b]).normalized());
      mid[key] = static_cast<int>(v.size()) - 1;
      return mid[key];
    };
    std::vector<std::array<int, 3>> next;
    for (const auto &t : f)
    {
      const int ab = midpoint(t[0], t[1]), bc = midpoint(t[1], t[2]), ca = midpoint(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    f = next;
  }
  auto s = std::make_shared<SurfaceMesh>();
  s->vertices = v;
  s->triangles = f;
  for (std::size_t i = 0; i < v.size(); i++)
  {
    s->volume_vertex.push_back(static_cast<int>(i));
  }
  for (const auto &t : f)
  {
    s->parent.push_back({0, 0});
    s->normals.push_back((v[t[1]] - v[t[0]]).cross(v[t[2]] - v[t[0]]).normalized());
  }
  return s;
}

TraceSpaces cube_spaces(int n, int p)
{
  return build_trace_spaces(std::make_shared<SurfaceMesh>(extract_boundary(cube_mesh(1.0, n))),
                            p);
}

double rel(const CMatrix &a, const CMatrix &b) { return (a - b).norm() / b.norm(); }

double reference_integral(const PanelPairRule &r, const std::function<double(const Vec3 &, const Vec3 &)> &f,
                          const Vec3 *a, const Vec3 *b)
{
  double s = 0.0;
  for (std::size_t q = 0; q < r.size(); q++)
  {
    const Vec3 x = a[0] + r.x[q][0] * (a[1] - a[0]) + r.x[q][1] * (a[2] - a[0]);
    const Vec3 y = b[0] + r.y[q][0] * (b[1] - b[0]) + r.y[q][1] * (b[2] - b[0]);
    s += r.w[q] * f(x, y);
  }
  return s;
}

}  // namespace

TEST_CASE("green_kernel")
{
  CHECK(std::abs(green_kernel(0.0, Vec3(0, 0, 0), Vec3(1, 0, 0)) - 1.0 / (4.0 * pi)) < 1e-17);
  CHECK(std::abs(green_kernel(pi, Vec3(0, 0, 0), Vec3(0, 0.6, 0.8)) + 1.0 / (4.0 * pi)) < 1e-16);
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 20; i++)
  {
    const Vec3 x(u(gen), u(gen), u(gen)), y(u(gen), u(gen), u(gen));
    CHECK(green_kernel(2.7, x, y) == green_kernel(2.7, y, x));
  }
  CHECK_THROWS_AS(green_kernel(1.0, Vec3(1, 2, 3), Vec3(1, 2, 3)), Error);
}

TEST_CASE("panel_quadrature")
{
  SUBCASE("weights carry the product of reference areas")
  {
    for (auto cls : {PairClass::far, PairClass::vertex, PairClass::edge, PairClass::identical})
    {
      for (int order : {2, 4, 8})
      {
        const PanelPairRule &r = panel_quadrature(cls, order);
        double s = 0.0;
        for (double w : r.w)
        {
          s += w;
        }
        CHECK(s == doctest::Approx(0.25).epsilon(1e-14));
      }
    }
    CHECK_THROWS_AS(panel_quadrature(PairClass::far, 0), Error);
  }

  SUBCASE("classification by shared vertices")
  {
    const int a[3] = {0, 1, 2}, b[3] = {3, 4, 5}, c[3] = {2, 7, 8}, d[3] = {1, 2, 9},
              e[3] = {2, 0, 1};
    CHECK(classify_pair(a, b) == PairClass::far);
    CHECK(classify_pair(a, c) == PairClass::vertex);
    CHECK(classify_pair(a, d) == PairClass::edge);
    CHECK(classify_pair(a, e) == PairClass::identical);
  }

  SUBCASE("identical pair with the Coulomb kernel")
  {
    // Oracle: the same rule at order 24, frozen.
    const double reference = 1.0030658847731844;
    double previous = 0.0;
    for (int order = 8; order <= 12; order++)
    {
      const PanelPairRule &r = panel_quadrature(PairClass::identical, order);
      double s = 0.0;
      for (std::size_t q = 0; q < r.size(); q++)
      {
        s += r.w[q] / std::hypot(r.x[q][0] - r.y[q][0], r.x[q][1] - r.y[q][1]);
      }
      if (order > 8)
      {
        CHECK(std::abs(s - previous) < 1e-8);
      }
      CHECK(std::abs(s - reference) < 1e-8);
      previous = s;
    }
  }

  SUBCASE("singular rules integrate smooth kernels")
  {
    // Congruent pair translated apart: 1/|x - y + d| is smooth on the touching geometry.
    const Vec3 d(0.3, -0.2, 2.5);
    auto f = [&](const Vec3 &x, const Vec3 &y) { return 1.0 / (x - y + d).norm(); };
    const Vec3 a[3] = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)};
    const Vec3 edge[3] = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0.2, -0.9, 0.3)};
    const Vec3 vertex[3] = {Vec3(0, 0, 0), Vec3(-0.8, 0.1, 0.2), Vec3(-0.1, -0.7, 0.0)};
    const double far_e = reference_integral(panel_quadrature(PairClass::far, 10), f, a, edge);
    const double far_v = reference_integral(panel_quadrature(PairClass::far, 10), f, a, vertex);
    const double far_i = reference_integral(panel_quadrature(PairClass::far, 10), f, a, a);
    CHECK(std::abs(reference_integral(panel_quadrature(PairClass::edge, 8), f, a, edge) - far_e) <
          1e-10);
    CHECK(std::abs(reference_integral(panel_quadrature(PairClass::vertex, 8), f, a, vertex) -
                   far_v) < 1e-10);
    CHECK(std::abs(reference_integral(panel_quadrature(PairClass::identical, 8), f, a, a) - far_i) <
          1e-10);
  }
}

TEST_CASE("single layer on the unit sphere")
{
  // <V_0 1, 1> = 4 pi and V~_0 1 (0) = 1 for the unit sphere; polyhedra converge to both.
  std::vector<double> err_form, err_center;
  for (int level = 1; level <= 3; level++)
  {
    const TraceSpaces s = build_trace_spaces(icosphere(level), 1);
    const CMatrix V = assemble_V(0.0, s);
    err_form.push_back(std::abs(V.sum().real() - 4.0 * pi) / (4.0 * pi));
    const CVector one = CVector::Ones(s.num_w());
    err_center.push_back(
        std::abs(single_layer_potential(0.0, s, w_density(s, one), Vec3::Zero()).value - 1.0));
  }
  MESSAGE("sphere errors " << err_form[0] << " " << err_form[1] << " " << err_form[2] << " | "
                           << err_center[0] << " " << err_center[1] << " " << err_center[2]);
  for (int i = 1; i < 3; i++)
  {
    CHECK(err_form[i] < err_form[i - 1] / 3.0);
    CHECK(err_center[i] < err_center[i - 1] / 3.0);
  }
  CHECK(err_form[2] < 1e-2);
  CHECK(err_center[2] < 5e-3);
}

TEST_CASE("operator matrices on the cube")
{
  const TraceSpaces s = cube_spaces(2, 1);
  const BemOperatorSet o0 = assemble_operators(0.0, s);
  const int NZ = s.num_z();

  SUBCASE("V at k = 0 is Hermitian positive definite")
  {
    CHECK(rel(o0.V_ww, CMatrix(o0.V_ww.adjoint())) < 1e-10);
    const CMatrix H = 0.5 * (o0.V_ww + o0.V_ww.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
  }

  SUBCASE("adjoint double layer at k = 0")
  {
    CHECK(rel(o0.Kp_zw, CMatrix(o0.K_wz.adjoint())) < 1e-8);
    CHECK(rel(o0.Kp_zz, CMatrix(o0.K_zz.adjoint())) < 1e-8);
  }

  SUBCASE("double layer of a constant")
  {
    // The interior potential of psi = 1 is -1, so (-1/2 + K_0) 1 = -1.
    const CVector one = CVector::Ones(NZ);
    const TraceSpaces &sp = s;
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    for (int i = 0; i < 10; i++)
    {
      const Vec3 x(u(gen), u(gen), u(gen));
      CHECK(std::abs(double_layer_potential(0.0, sp, z_density(sp, one), x).value + 1.0) < 1e-6);
    }
    const CVector M1 = RMatrix(s.M_wz).cast<cplx>() * one;
    const CVector lhs = -0.5 * M1 + o0.K_wz * one;
    CHECK((lhs + M1).norm() / M1.norm() < 1e-5);
  }

  SUBCASE("hypersingular operator at k = 0")
  {
    const CVector one = CVector::Ones(NZ);
    CHECK((o0.W_zz * one).norm() / o0.W_zz.norm() < 1e-10);
    CHECK(rel(o0.W_zz, CMatrix(o0.W_zz.adjoint())) < 1e-10);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (o0.W_zz + o0.W_zz.adjoint()));
    CHECK(es.eigenvalues()[0] > -1e-12 * es.eigenvalues().maxCoeff());
    CHECK(es.eigenvalues()[1] > 0.0);
    std::mt19937 gen(11);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int i = 0; i < 100; i++)
    {
      CVector z(NZ);
      for (int j = 0; j < NZ; j++)
      {
        z[j] = n(gen);
      }
      CHECK(z.dot(o0.W_zz * z).real() >= 0.0);
    }
    TraceSpaces broken = s;
    broken.z_basis = SimplexLagrange(2, 0);
    CHECK_THROWS_AS(assemble_W(0.0, broken), Error);
  }

  SUBCASE("reciprocity at k > 0")
  {
    const BemOperatorSet o = assemble_operators(3.0, s);
    CHECK(rel(o.V_ww, CMatrix(o.V_ww.transpose())) < 1e-8);
    CHECK(rel(o.V_zz, CMatrix(o.V_zz.transpose())) < 1e-8);
    CHECK(rel(o.W_zz, CMatrix(o.W_zz.transpose())) < 1e-8);
    CHECK(rel(o.Kp_zz, CMatrix(o.K_zz.transpose())) < 1e-8);
    CHECK(rel(o.Kp_zw, CMatrix(o.K_wz.transpose())) < 1e-8);
  }

  SUBCASE("continuity in k")
  {
    const BemOperatorSet o = assemble_operators(1e-3, s);
    CHECK(rel(o.K_wz, o0.K_wz) < 1e-5);
    CHECK(rel(o.V_ww, o0.V_ww) < 1e-2);
    CHECK(rel(o.W_zz, o0.W_zz) < 1e-2);
  }

  SUBCASE("single operators match the combined sweep")
  {
    CHECK(assemble_V(0.0, s) == o0.V_ww);
    CHECK(assemble_K(0.0, s) == o0.K_wz);
    CHECK(assemble_Kp(0.0, s) == o0.Kp_zw);
    CHECK(assemble_W(0.0, s) == o0.W_zz);
  }

  SUBCASE("combined operators")
  {
    const CombinedOperators c0 = assemble_combined(o0, s);
    CHECK(c0.B == CMatrix(-o0.W_zz));
    const CMatrix Mzw = RMatrix(RMatrix(s.M_wz).transpose()).cast<cplx>();
    CHECK(c0.Ap == CMatrix(0.5 * Mzw + o0.Kp_zw));

    const double k = 2.0;
    const BemOperatorSet o = assemble_operators(k, s);
    const CombinedOperators c = assemble_combined(o, s);
    const cplx ik(0.0, k);
    const CMatrix Mzz = RMatrix(s.M_zz).cast<cplx>();
    // B z + ik Ap w against the operators applied one by one.
    const CVector z = CVector::LinSpaced(s.num_z(), -1.0, 2.0);
    const CVector w = CVector::LinSpaced(s.num_w(), 0.5, -0.7);
    const CVector direct = -o.W_zz * z - ik * (0.5 * (Mzz * z) - o.K_zz * z) +
                           ik * (0.5 * (Mzw * w) + o.Kp_zw * w + ik * (o.V_wz.transpose() * w));
    CHECK((c.B * z + ik * (c.Ap * w) - direct).norm() <= 1e-14 * direct.norm());

    BemOperatorSet wrong = o;
    wrong.V_ww = CMatrix::Zero(3, 3);
    CHECK_THROWS_AS(assemble_combined(wrong, s), Error);
  }
}

TEST_CASE("layer potentials")
{
  const TraceSpaces s = cube_spaces(1, 2);
  std::mt19937 gen(7);
  std::normal_distribution<double> n(0.0, 1.0);
  CVector w(s.num_w()), z(s.num_z());
  for (auto &c : w)
  {
    c = cplx(n(gen), n(gen));
  }
  for (auto &c : z)
  {
    c = cplx(n(gen), n(gen));
  }
  const double k = 2.5, h = 1e-3;
  for (const Vec3 &x : {Vec3(1.1, 0.3, -0.2), Vec3(0.05, -0.1, 0.2)})
  {
    for (int which = 0; which < 2; which++)
    {
      auto eval = [&](const Vec3 &y)
      {
        return which == 0 ? single_layer_potential(k, s, w_density(s, w), y).value
                          : double_layer_potential(k, s, z_density(s, z), y).value;
      };
      const cplx u0 = eval(x);
      cplx lap = -6.0 * u0;
      for (int d = 0; d < 3; d++)
      {
        Vec3 e = Vec3::Zero();
        e[d] = h;
        lap += eval(x + e) + eval(x - e);
      }
      lap /= h * h;
      CHECK(std::abs(lap + k * k * u0) < 1e-4 * std::abs(k * k * u0));
    }
  }
  CHECK_THROWS_AS(single_layer_potential(k, s, w_density(s, w), s.panels[0].point(0.25, 0.25)), Error);
}

TEST_CASE("Calderon residual of zero traces")
{
  const TraceSpaces s = cube_spaces(1, 1);
  const BemOperatorSet o = assemble_operators(2.0, s);
  const CalderonResidual r =
      calderon_residual(o, s, CVector::Zero(s.num_z()), CVector::Zero(s.num_w()));
  CHECK(r.r1 == 0.0);
  CHECK(r.r2 == 0.0);
}
