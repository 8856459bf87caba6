// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include <Eigen/SparseLU>

namespace mortar
{

namespace
{

using SparseLU = Eigen::SparseLU<CSparse, Eigen::COLAMDOrdering<int>>;

double seconds_since(std::chrono::steady_clock::time_point t0)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void factorize(SparseLU &lu, const CSparse &A)
{
  lu.analyzePattern(A);
  lu.factorize(A);
  if (lu.info() != Eigen::Success)
  {
    throw SingularMatrixError("sparse LU of the impedance block failed: " + lu.lastErrorMessage(),
                              std::numeric_limits<double>::infinity());
  }
}

double one_norm(const CSparse &A)
{
  double best = 0.0;
  for (int j = 0; j < A.outerSize(); j++)
  {
    double s = 0.0;
    for (CSparse::InnerIterator it(A, j); it; ++it)
    {
      s += std::abs(it.value());
    }
    best = std::max(best, s);
  }
  return best;
}

double hager(SparseLU &lu, int n)
{
  CVector x = CVector::Constant(n, 1.0 / n);
  double est = 0.0;
  for (int iter = 0; iter < 5; iter++)
  {
    const CVector y = lu.solve(x);
    est = y.lpNorm<1>();
    CVector xi(n);
    for (int i = 0; i < n; i++)
    {
      xi[i] = std::abs(y[i]) > 0.0 ? y[i] / std::abs(y[i]) : cplx(1.0);
    }
    const CVector z = lu.adjoint().solve(xi);
    int j = 0;
    const double zmax = z.cwiseAbs().maxCoeff(&j);
    if (zmax <= std::real(x.dot(z)))
    {
      break;
    }
    x.setZero();
    x[j] = 1.0;
  }
  return est;
}

// Dense LU with explicit pivot inspection.
Eigen::PartialPivLU<CMatrix> dense_lu(const CMatrix &K, const std::string &what)
{
  Eigen::PartialPivLU<CMatrix> lu(K);
  const double row_norm = K.cwiseAbs().rowwise().sum().maxCoeff();
  const auto &LU = lu.matrixLU();
  double pivot_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < LU.rows(); i++)
  {
    pivot_min = std::min(pivot_min, std::abs(LU(i, i)));
  }
  if (!(pivot_min >= 1e-13 * row_norm))
  {
    const double rc = lu.rcond();
    throw SingularMatrixError(what + " is numerically singular",
                              rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity());
  }
  return lu;
}

struct Reduced
{
  SparseLU lu;
  CMatrix K;      // (nZ + nW) square, unknowns (m, uext)
  CVector b;
  CVector Ainv_f;
};

// Boundary nodes: rows of B1 that hold nonzeros, which must coincide with the columns of B4.
std::vector<int> coupled_nodes(const BlockSystem &s)
{
  std::vector<char> used(s.nV, 0);
  for (int j = 0; j < s.B1.outerSize(); j++)
  {
    for (CSparse::InnerIterator it(s.B1, j); it; ++it)
    {
      used[it.row()] = 1;
    }
  }
  for (int j = 0; j < s.B4.outerSize(); j++)
  {
    for (CSparse::InnerIterator it(s.B4, j); it; ++it)
    {
      used[it.col()] = 1;
    }
  }
  std::vector<int> nodes;
  for (int i = 0; i < s.nV; i++)
  {
    if (used[i])
    {
      nodes.push_back(i);
    }
  }
  return nodes;
}

void reduce(const BlockSystem &s, Reduced &r)
{
  factorize(r.lu, s.A);
  const std::vector<int> nodes = coupled_nodes(s);
  const int nb = static_cast<int>(nodes.size());
  std::vector<int> pos(s.nV, -1);
  for (int i = 0; i < nb; i++)
  {
    pos[nodes[i]] = i;
  }
  // Boundary block of A^{-1}, in column chunks to bound memory.
  CMatrix Xbb(nb, nb);
  const int chunk = 256;
  for (int c0 = 0; c0 < nb; c0 += chunk)
  {
    const int nc = std::min(chunk, nb - c0);
    CMatrix E = CMatrix::Zero(s.nV, nc);
    for (int c = 0; c < nc; c++)
    {
      E(nodes[c0 + c], c) = 1.0;
    }
    const CMatrix X = r.lu.solve(E);
    for (int i = 0; i < nb; i++)
    {
      Xbb.block(i, c0, 1, nc) = X.row(nodes[i]);
    }
  }
  CMatrix B1b = CMatrix::Zero(nb, s.nW);
  for (int j = 0; j < s.B1.outerSize(); j++)
  {
    for (CSparse::InnerIterator it(s.B1, j); it; ++it)
    {
      B1b(pos[it.row()], it.col()) += it.value();
    }
  }
  CMatrix B4b = CMatrix::Zero(s.nW, nb);
  for (int j = 0; j < s.B4.outerSize(); j++)
  {
    for (CSparse::InnerIterator it(s.B4, j); it; ++it)
    {
      B4b(it.row(), pos[it.col()]) += it.value();
    }
  }
  r.Ainv_f = r.lu.solve(s.f);
  const int n = s.nZ + s.nW;
  r.K.resize(n, n);
  r.K.block(0, 0, s.nZ, s.nW) = s.B2;
  r.K.block(0, s.nW, s.nZ, s.nZ) = s.B3;
  r.K.block(s.nZ, 0, s.nW, s.nW) = s.B5 - B4b * (Xbb * B1b);
  r.K.block(s.nZ, s.nW, s.nW, s.nZ) = s.B6;
  r.b.resize(n);
  r.b << s.r2, s.r3 - s.B4 * r.Ainv_f;
}

void back_substitute(const BlockSystem &s, const Reduced &r, const CVector &mu,
                     SolutionTriple &out)
{
  out.m = mu.segment(0, s.nW);
  out.uext = mu.segment(s.nW, s.nZ);
  const CVector t = s.B1 * out.m;
  out.u = r.Ainv_f - r.lu.solve(t);
}

}  // namespace

CVector SolutionTriple::stacked() const
{
  CVector x(u.size() + m.size() + uext.size());
  x << u, m, uext;
  return x;
}

double relative_residual(const BlockSystem &system, const SolutionTriple &x)
{
  const CVector b = system.rhs();
  const double res = (system.apply(x.stacked()) - b).norm();
  const double nb = b.norm();
  return nb > 0.0 ? res / nb : res;
}

double condition_estimate(const CSparse &A)
{
  SparseLU lu;
  factorize(lu, A);
  return one_norm(A) * hager(lu, static_cast<int>(A.rows()));
}

SolutionTriple schur_solve(const BlockSystem &system)
{
  const auto t0 = std::chrono::steady_clock::now();
  Reduced r;
  reduce(system, r);
  const auto lu = dense_lu(r.K, "reduced boundary system");
  SolutionTriple out;
  back_substitute(system, r, lu.solve(r.b), out);
  out.solver = "schur";
  out.factorizations = 2;
  out.residual = relative_residual(system, out);
  out.seconds = seconds_since(t0);
  return out;
}

SolutionTriple direct_solve(const BlockSystem &system, int max_size)
{
  if (system.size() > max_size)
  {
    throw Error("direct_solve: system size " + std::to_string(system.size()) +
                " exceeds the cap " + std::to_string(max_size));
  }
  const auto t0 = std::chrono::steady_clock::now();
  const CMatrix K = system.dense();
  const auto lu = dense_lu(K, "block system");
  const CVector x = lu.solve(system.rhs());
  SolutionTriple out;
  out.u = x.segment(0, system.nV);
  out.m = x.segment(system.nV, system.nW);
  out.uext = x.segment(system.nV + system.nW, system.nZ);
  out.solver = "direct";
  out.factorizations = 1;
  out.residual = relative_residual(system, out);
  out.seconds = seconds_since(t0);
  return out;
}

SolutionTriple gmres_solve(const BlockSystem &system, const GmresOptions &opt)
{
  const auto t0 = std::chrono::steady_clock::now();
  Reduced r;
  reduce(system, r);
  const int nW = system.nW, nZ = system.nZ, n = nW + nZ;
  // Reorder to (uext, m) so that the diagonal blocks B3 and the reduced (m, m) block are
  // square.
  CMatrix K(n, n);
  K.block(0, 0, nZ, nZ) = r.K.block(0, nW, nZ, nZ);
  K.block(0, nZ, nZ, nW) = r.K.block(0, 0, nZ, nW);
  K.block(nZ, 0, nW, nZ) = r.K.block(nZ, nW, nW, nZ);
  K.block(nZ, nZ, nW, nW) = r.K.block(nZ, 0, nW, nW);
  const CVector b = r.b;

  Eigen::PartialPivLU<CMatrix> P1, P2;
  if (opt.preconditioned)
  {
    P1 = dense_lu(K.block(0, 0, nZ, nZ), "preconditioner block B3");
    P2 = dense_lu(K.block(nZ, nZ, nW, nW), "preconditioner block (m, m)");
  }
  auto precond = [&](const CVector &v)
  {
    if (!opt.preconditioned)
    {
      return CVector(v);
    }
    CVector w(n);
    w.segment(0, nZ) = P1.solve(v.segment(0, nZ));
    w.segment(nZ, nW) = P2.solve(v.segment(nZ, nW));
    return w;
  };

  // Right-preconditioned restarted GMRES with Givens rotations.
  const double bnorm = b.norm();
  CVector x = CVector::Zero(n);
  int iterations = 0;
  double relres = bnorm > 0.0 ? 1.0 : 0.0;
  const int m = std::max(1, std::min(opt.restart, n));
  while (relres > opt.tol && iterations < opt.maxit)
  {
    const CVector r0 = b - K * x;
    const double beta = r0.norm();
    relres = beta / bnorm;
    if (relres <= opt.tol)
    {
      break;
    }
    CMatrix V(n, m + 1);
    CMatrix H = CMatrix::Zero(m + 1, m);
    std::vector<cplx> cs(m), sn(m);
    CVector g = CVector::Zero(m + 1);
    g[0] = beta;
    V.col(0) = r0 / beta;
    int j = 0;
    for (; j < m && iterations < opt.maxit; j++)
    {
      iterations++;
      CVector w = K * precond(V.col(j));
      for (int i = 0; i <= j; i++)
      {
        H(i, j) = V.col(i).dot(w);
        w -= H(i, j) * V.col(i);
      }
      H(j + 1, j) = w.norm();
      if (std::abs(H(j + 1, j)) > 0.0)
      {
        V.col(j + 1) = w / H(j + 1, j);
      }
      for (int i = 0; i < j; i++)
      {
        const cplx t = std::conj(cs[i]) * H(i, j) + std::conj(sn[i]) * H(i + 1, j);
        H(i + 1, j) = -sn[i] * H(i, j) + cs[i] * H(i + 1, j);
        H(i, j) = t;
      }
      const double denom = std::hypot(std::abs(H(j, j)), std::abs(H(j + 1, j)));
      cs[j] = denom > 0.0 ? H(j, j) / denom : cplx(1.0);
      sn[j] = denom > 0.0 ? H(j + 1, j) / denom : cplx(0.0);
      H(j, j) = denom;
      H(j + 1, j) = 0.0;
      g[j + 1] = -sn[j] * g[j];
      g[j] = std::conj(cs[j]) * g[j];
      relres = std::abs(g[j + 1]) / bnorm;
      if (relres <= opt.tol)
      {
        j++;
        break;
      }
    }
    const CVector y =
        H.topLeftCorner(j, j).triangularView<Eigen::Upper>().solve(g.head(j));
    x += precond(V.leftCols(j) * y);
  }
  relres = bnorm > 0.0 ? (b - K * x).norm() / bnorm : (K * x).norm();
  if (!(relres <= opt.tol))
  {
    throw Error("gmres_solve: no convergence in " + std::to_string(iterations) +
                " iterations, relative residual " + std::to_string(relres));
  }
  CVector mu(n);
  mu << x.segment(nZ, nW), x.segment(0, nZ);
  SolutionTriple out;
  back_substitute(system, r, mu, out);
  out.solver = opt.preconditioned ? "gmres-blockdiag" : "gmres";
  out.iterations = iterations;
  out.factorizations = opt.preconditioned ? 3 : 1;
  out.residual = relative_residual(system, out);
  out.seconds = seconds_since(t0);
  return out;
}

}  // namespace mortar
