// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/bem_operators.hpp"

#include <algorithm>
#include <map>

#include "mortar/kernel.hpp"
#include "mortar/panel_quadrature.hpp"
#include "mortar/parallel.hpp"
#include "mortar/quadrature.hpp"

namespace mortar
{

namespace
{

// Reference basis data at a point set: barycentrics, W_h and Z_h values and the Z_h
// derivatives with respect to the barycentrics.
struct RefTable
{
  int n = 0;
  std::vector<std::array<double, 3>> lam;
  std::vector<double> wv;  // n * w_local
  std::vector<double> zv;  // n * z_local
  std::vector<double> dz;  // n * z_local * 3
  // Distinct points (rules built from tensor products repeat many of them).
  std::vector<std::array<double, 3>> distinct;
  std::vector<int> index;  // point -> distinct point
};

RefTable make_table(const TraceSpaces &s, const std::vector<std::array<double, 3>> &lam)
{
  RefTable r;
  r.n = static_cast<int>(lam.size());
  r.lam = lam;
  const int nw = s.w_local(), nz = s.z_local();
  r.wv.resize(r.n * nw);
  r.zv.resize(r.n * nz);
  r.dz.resize(r.n * nz * 3);
  for (int q = 0; q < r.n; q++)
  {
    s.w_basis.eval(lam[q].data(), &r.wv[q * nw]);
    s.z_basis.eval(lam[q].data(), &r.zv[q * nz]);
    s.z_basis.eval_dlambda(lam[q].data(), &r.dz[q * nz * 3]);
  }
  std::map<std::array<double, 3>, int> seen;
  r.index.resize(r.n);
  for (int q = 0; q < r.n; q++)
  {
    const auto [it, fresh] = seen.emplace(lam[q], static_cast<int>(r.distinct.size()));
    if (fresh)
    {
      r.distinct.push_back(lam[q]);
    }
    r.index[q] = it->second;
  }
  return r;
}

// One panel at the points of a reference table: physical points and surface curls.
struct Side
{
  int n = 0;
  const RefTable *ref = nullptr;
  const double *weight = nullptr;  // tensor rules only; includes 2 * area
  std::vector<Vec3> x;
  std::vector<Vec3> curl;  // n * z_local
  const double *wv(int q, int nw) const { return &ref->wv[q * nw]; }
  const double *zv(int q, int nz) const { return &ref->zv[q * nz]; }
};

void place(const TraceSpaces &s, int t, const RefTable &ref, Side &side)
{
  const int nz = s.z_local();
  const TriangleGeometry &g = s.panels[t];
  Vec3 c[3];
  for (int a = 0; a < 3; a++)
  {
    c[a] = g.normal.cross(g.grad_lambda[a]);
  }
  side.n = ref.n;
  side.ref = &ref;
  side.x.resize(ref.n);
  side.curl.resize(ref.n * nz);
  for (int q = 0; q < ref.n; q++)
  {
    const auto &l = ref.lam[q];
    side.x[q] = l[0] * g.v[0] + l[1] * g.v[1] + l[2] * g.v[2];
    const double *d = &ref.dz[q * nz * 3];
    for (int i = 0; i < nz; i++)
    {
      side.curl[q * nz + i] = d[3 * i] * c[0] + d[3 * i + 1] * c[1] + d[3 * i + 2] * c[2];
    }
  }
}

// Everything needed to integrate over one ordered pair (P, Q), x in P and y in Q.
struct PairView
{
  const Side *P, *Q;
  bool tensor;
  const std::vector<double> *w;  // singular rules, already scaled
  bool identical;
  int tier = -1;  // far tier, -1 for singular pairs
};

struct Scratch
{
  Side P, Q;
  std::vector<double> w;
};

int perm_code(const int *perm)
{
  static constexpr int codes[3][3] = {{-1, 0, 1}, {2, -1, 3}, {4, 5, -1}};
  return codes[perm[0]][perm[1]];
}

class SweepContext
{
public:
  SweepContext(const TraceSpaces &s, const BemQuadrature &q) : s_(s), q_(q)
  {
    const int nt = static_cast<int>(s.surface->num_triangles());
    centroid_.resize(nt);
    diameter_.resize(nt);
    for (int t = 0; t < nt; t++)
    {
      centroid_[t] = s.surface->centroid(t);
      diameter_[t] = s.surface->diameter(t);
    }
    for (int tier = 0; tier < 4; tier++)
    {
      const int n = q.far_points[tier] + s.degree - 1;
      if (n < 1)
      {
        throw Error("BemQuadrature: far points must be positive");
      }
      const TriangleRule rule = triangle_rule_points(n);
      std::vector<std::array<double, 3>> lam;
      for (const auto &p : rule.points)
      {
        lam.push_back({1.0 - p[0] - p[1], p[0], p[1]});
      }
      far_ref_[tier] = make_table(s, lam);
      far_weight_[tier].resize(nt);
      far_[tier].resize(nt);
      for (int t = 0; t < nt; t++)
      {
        place(s, t, far_ref_[tier], far_[tier][t]);
        far_weight_[tier][t].resize(rule.size());
        for (std::size_t a = 0; a < rule.size(); a++)
        {
          far_weight_[tier][t][a] = rule.weights[a] * 2.0 * s.panels[t].area;
        }
        far_[tier][t].weight = far_weight_[tier][t].data();
      }
    }
    if (q.singular_order < 1)
    {
      throw Error("BemQuadrature: singular order must be positive");
    }
    // Reference tables for every singular class, side and vertex permutation.
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int cls = 1; cls <= 3; cls++)
    {
      const PanelPairRule &rule = panel_quadrature(static_cast<PairClass>(cls), q.singular_order);
      for (int side = 0; side < 2; side++)
      {
        const auto &pts = side == 0 ? rule.x : rule.y;
        for (const auto &perm : perms)
        {
          std::vector<std::array<double, 3>> lam(pts.size());
          for (std::size_t i = 0; i < pts.size(); i++)
          {
            const double l[3] = {1.0 - pts[i][0] - pts[i][1], pts[i][0], pts[i][1]};
            for (int j = 0; j < 3; j++)
            {
              lam[i][perm[j]] = l[j];
            }
          }
          singular_[cls - 1][side][perm_code(perm)] = make_table(s, lam);
        }
      }
    }
  }

  int num_panels() const { return static_cast<int>(centroid_.size()); }
  const Side &far_side(int tier, int t) const { return far_[tier][t]; }

  PairView view(int P, int Q, Scratch &scratch) const
  {
    const int *a = s_.surface->triangles[P].data();
    const int *b = s_.surface->triangles[Q].data();
    const PairClass cls = classify_pair(a, b);
    if (cls == PairClass::far)
    {
      const double eta =
          (centroid_[P] - centroid_[Q]).norm() / std::max(diameter_[P], diameter_[Q]);
      int tier = 3;
      for (int i = 2; i >= 0; i--)
      {
        if (eta < q_.near_eta[i])
        {
          tier = i;
        }
      }
      return {&far_[tier][P], &far_[tier][Q], true, nullptr, false, tier};
    }
    // Shared vertices first, in matching order.
    int pa[3], pb[3], common = 0;
    for (int i = 0; i < 3; i++)
    {
      for (int j = 0; j < 3; j++)
      {
        if (a[i] == b[j])
        {
          pa[common] = i;
          pb[common] = j;
          common++;
          break;
        }
      }
    }
    auto complete = [common](int *perm)
    {
      int m = common;
      for (int i = 0; i < 3 && m < 3; i++)
      {
        if (std::find(perm, perm + m, i) == perm + m)
        {
          perm[m++] = i;
        }
      }
    };
    complete(pa);
    complete(pb);
    const int c = static_cast<int>(cls) - 1;
    place(s_, P, singular_[c][0][perm_code(pa)], scratch.P);
    place(s_, Q, singular_[c][1][perm_code(pb)], scratch.Q);
    const PanelPairRule &rule = panel_quadrature(cls, q_.singular_order);
    const double scale = 4.0 * s_.panels[P].area * s_.panels[Q].area;
    scratch.w.resize(rule.size());
    for (std::size_t i = 0; i < rule.size(); i++)
    {
      scratch.w[i] = rule.w[i] * scale;
    }
    return {&scratch.P, &scratch.Q, false, &scratch.w, cls == PairClass::identical};
  }

private:
  const TraceSpaces &s_;
  const BemQuadrature &q_;
  std::vector<Vec3> centroid_;
  std::vector<double> diameter_;
  RefTable far_ref_[4];
  std::vector<std::vector<double>> far_weight_[4];
  std::vector<Side> far_[4];
  RefTable singular_[3][2][6];
};

template <class F>
void visit(const PairView &v, F &&f)
{
  if (v.tensor)
  {
    for (int a = 0; a < v.P->n; a++)
    {
      for (int b = 0; b < v.Q->n; b++)
      {
        f(a, b, v.P->weight[a] * v.Q->weight[b]);
      }
    }
  }
  else
  {
    for (int q = 0; q < v.P->n; q++)
    {
      f(q, q, (*v.w)[q]);
    }
  }
}

// Runs compute(P, Q, view, local) for every unordered pair P <= Q, in parallel over P, and
// scatter(P, Q, local) serially in lexicographic pair order.
template <class Local, class Compute, class Scatter>
void sweep(const SweepContext &ctx, const Local &zero, Compute compute, Scatter scatter)
{
  const int nt = ctx.num_panels();
  const int chunk = std::max(1, 4 * num_threads());
  std::vector<std::vector<Local>> rows(chunk);
  for (int start = 0; start < nt; start += chunk)
  {
    const int count = std::min(chunk, nt - start);
    parallel_for(count,
                 [&](int r)
                 {
                   const int P = start + r;
                   Scratch scratch;
                   rows[r].assign(nt - P, zero);
                   for (int Q = P; Q < nt; Q++)
                   {
                     const PairView v = ctx.view(P, Q, scratch);
                     compute(P, Q, v, rows[r][Q - P]);
                   }
                 });
    for (int r = 0; r < count; r++)
    {
      const int P = start + r;
      for (int Q = P; Q < nt; Q++)
      {
        scatter(P, Q, rows[r][Q - P]);
      }
    }
  }
}

// Local blocks of one pair, row-major with the P-side index first.
struct Blocks
{
  std::vector<cplx> Vww, Vwz, Vzw, Vzz, Kwz, Kzz, Kpzw, Kpzz, Wzz;
};

}  // namespace

BemOperatorSet assemble_operators(double k, const TraceSpaces &spaces, const BemQuadrature &quad)
{
  const SweepContext ctx(spaces, quad);
  const int nw = spaces.w_local(), nz = spaces.z_local();
  BemOperatorSet ops;
  ops.k = k;
  const int NW = spaces.num_w(), NZ = spaces.num_z();
  ops.V_ww = CMatrix::Zero(NW, NW);
  ops.V_wz = CMatrix::Zero(NW, NZ);
  ops.V_zz = CMatrix::Zero(NZ, NZ);
  ops.K_wz = CMatrix::Zero(NW, NZ);
  ops.K_zz = CMatrix::Zero(NZ, NZ);
  ops.Kp_zw = CMatrix::Zero(NZ, NW);
  ops.Kp_zz = CMatrix::Zero(NZ, NZ);
  ops.W_zz = CMatrix::Zero(NZ, NZ);

  Blocks zero;
  zero.Vww.assign(nw * nw, 0.0);
  zero.Vwz.assign(nw * nz, 0.0);
  zero.Vzw.assign(nz * nw, 0.0);
  zero.Vzz.assign(nz * nz, 0.0);
  zero.Kwz.assign(nw * nz, 0.0);
  zero.Kzz.assign(nz * nz, 0.0);
  zero.Kpzw.assign(nz * nw, 0.0);
  zero.Kpzz.assign(nz * nz, 0.0);
  zero.Wzz.assign(nz * nz, 0.0);
  const double k2 = k * k;

  auto compute = [&](int P, int Q, const PairView &v, Blocks &b)
  {
    const Vec3 &nP = spaces.panels[P].normal;
    const Vec3 &nQ = spaces.panels[Q].normal;
    const double nn = nP.dot(nQ);
    visit(v,
          [&](int ip, int iq, double w)
          {
            const Vec3 d = v.P->x[ip] - v.Q->x[iq];
            const double r = d.norm();
            cplx G, dG;
            green_radial(k, r, G, dG);
            const cplx g = G * w;
            // d/dn vanishes identically on a flat panel paired with itself.
            const cplx kx = v.identical ? cplx(0.0) : dG * (d.dot(nP) / r) * w;
            const cplx ky = v.identical ? cplx(0.0) : -dG * (d.dot(nQ) / r) * w;
            const double *wp = v.P->wv(ip, nw), *wq = v.Q->wv(iq, nw);
            const double *zp = v.P->zv(ip, nz), *zq = v.Q->zv(iq, nz);
            const Vec3 *cp = &v.P->curl[ip * nz], *cq = &v.Q->curl[iq * nz];
            for (int a = 0; a < nw; a++)
            {
              const cplx ga = g * wp[a];
              for (int c = 0; c < nw; c++)
              {
                b.Vww[a * nw + c] += ga * wq[c];
              }
              const cplx ka = ky * wp[a];
              for (int j = 0; j < nz; j++)
              {
                b.Vwz[a * nz + j] += ga * zq[j];
                b.Kwz[a * nz + j] += ka * zq[j];
              }
            }
            for (int i = 0; i < nz; i++)
            {
              const cplx gi = g * zp[i];
              const cplx kxi = kx * zp[i];
              const cplx kyi = ky * zp[i];
              for (int c = 0; c < nw; c++)
              {
                b.Vzw[i * nw + c] += gi * wq[c];
                b.Kpzw[i * nw + c] += kxi * wq[c];
              }
              for (int j = 0; j < nz; j++)
              {
                const cplx vij = gi * zq[j];
                b.Vzz[i * nz + j] += vij;
                b.Kzz[i * nz + j] += kyi * zq[j];
                b.Kpzz[i * nz + j] += kxi * zq[j];
                b.Wzz[i * nz + j] += g * cp[i].dot(cq[j]) - k2 * nn * vij;
              }
            }
          });
  };

  auto scatter = [&](int P, int Q, const Blocks &b)
  {
    const int *zP = spaces.z_dofs(P), *zQ = spaces.z_dofs(Q);
    const int wP = P * nw, wQ = Q * nw;
    const bool mirror = P != Q;
    for (int a = 0; a < nw; a++)
    {
      for (int c = 0; c < nw; c++)
      {
        ops.V_ww(wP + a, wQ + c) += b.Vww[a * nw + c];
        if (mirror)
        {
          ops.V_ww(wQ + c, wP + a) += b.Vww[a * nw + c];
        }
      }
      for (int j = 0; j < nz; j++)
      {
        ops.V_wz(wP + a, zQ[j]) += b.Vwz[a * nz + j];
        ops.K_wz(wP + a, zQ[j]) += b.Kwz[a * nz + j];
        if (mirror)
        {
          ops.Kp_zw(zQ[j], wP + a) += b.Kwz[a * nz + j];
        }
      }
    }
    for (int i = 0; i < nz; i++)
    {
      for (int c = 0; c < nw; c++)
      {
        ops.Kp_zw(zP[i], wQ + c) += b.Kpzw[i * nw + c];
        if (mirror)
        {
          ops.V_wz(wQ + c, zP[i]) += b.Vzw[i * nw + c];
          ops.K_wz(wQ + c, zP[i]) += b.Kpzw[i * nw + c];
        }
      }
      for (int j = 0; j < nz; j++)
      {
        const int o = i * nz + j;
        ops.V_zz(zP[i], zQ[j]) += b.Vzz[o];
        ops.K_zz(zP[i], zQ[j]) += b.Kzz[o];
        ops.Kp_zz(zP[i], zQ[j]) += b.Kpzz[o];
        ops.W_zz(zP[i], zQ[j]) += b.Wzz[o];
        if (mirror)
        {
          ops.V_zz(zQ[j], zP[i]) += b.Vzz[o];
          ops.K_zz(zQ[j], zP[i]) += b.Kpzz[o];
          ops.Kp_zz(zQ[j], zP[i]) += b.Kzz[o];
          ops.W_zz(zQ[j], zP[i]) += b.Wzz[o];
        }
      }
    }
  };

  sweep(ctx, zero, compute, scatter);
  return ops;
}

CMatrix assemble_V(double k, const TraceSpaces &spaces, const BemQuadrature &quad)
{
  return assemble_operators(k, spaces, quad).V_ww;
}

CMatrix assemble_K(double k, const TraceSpaces &spaces, const BemQuadrature &quad)
{
  return assemble_operators(k, spaces, quad).K_wz;
}

CMatrix assemble_Kp(double k, const TraceSpaces &spaces, const BemQuadrature &quad)
{
  return assemble_operators(k, spaces, quad).Kp_zw;
}

CMatrix assemble_W(double k, const TraceSpaces &spaces, const BemQuadrature &quad)
{
  if (spaces.z_basis.degree() < 1)
  {
    throw Error("assemble_W: trial space must be continuous");
  }
  return assemble_operators(k, spaces, quad).W_zz;
}

CombinedOperators assemble_combined(const BemOperatorSet &ops, const TraceSpaces &spaces)
{
  const int NW = spaces.num_w(), NZ = spaces.num_z();
  if (ops.V_ww.rows() != NW || ops.W_zz.rows() != NZ || ops.K_zz.rows() != NZ ||
      ops.Kp_zw.cols() != NW)
  {
    throw Error("assemble_combined: dimension mismatch");
  }
  const cplx ik = I * ops.k;
  const RMatrix Mzz = RMatrix(spaces.M_zz);
  const RMatrix Mzw = RMatrix(spaces.M_wz).transpose();
  CombinedOperators c;
  c.B = -ops.W_zz - ik * (0.5 * Mzz.cast<cplx>() - ops.K_zz);
  c.Ap = 0.5 * Mzw.cast<cplx>() + ops.Kp_zw + ik * ops.V_wz.transpose();
  return c;
}

OperatorLoads apply_operators(double k, const TraceSpaces &spaces, const SurfaceField &f,
                              const BemQuadrature &quad)
{
  const SweepContext ctx(spaces, quad);
  const int nw = spaces.w_local(), nz = spaces.z_local();
  OperatorLoads out;
  out.V_w = CVector::Zero(spaces.num_w());
  out.V_z = CVector::Zero(spaces.num_z());
  out.Kp_z = CVector::Zero(spaces.num_z());
  const int order = 2 * spaces.degree + 2;
  out.M_w = load_w(spaces, f, order);
  out.M_z = load_z(spaces, f, order);

  // Per pair: P-side tests against f on Q, and Q-side tests against f on P.
  struct Local
  {
    std::vector<cplx> vw_p, vz_p, kz_p, vw_q, vz_q, kz_q;
  };
  Local zero;
  zero.vw_p.assign(nw, 0.0);
  zero.vw_q.assign(nw, 0.0);
  zero.vz_p.assign(nz, 0.0);
  zero.vz_q.assign(nz, 0.0);
  zero.kz_p.assign(nz, 0.0);
  zero.kz_q.assign(nz, 0.0);

  // f at the far-rule points of every panel, evaluated once.
  const int nt = ctx.num_panels();
  std::vector<std::vector<cplx>> far_f[4];
  for (int tier = 0; tier < 4; tier++)
  {
    far_f[tier].resize(nt);
    parallel_for(nt,
                 [&](int t)
                 {
                   const Side &side = ctx.far_side(tier, t);
                   far_f[tier][t].resize(side.n);
                   for (int i = 0; i < side.n; i++)
                   {
                     far_f[tier][t][i] = f(side.x[i], spaces.panels[t].normal);
                   }
                 });
  }

  auto compute = [&](int P, int Q, const PairView &v, Local &l)
  {
    const Vec3 &nP = spaces.panels[P].normal;
    const Vec3 &nQ = spaces.panels[Q].normal;
    const bool mirror = P != Q;
    std::vector<cplx> fp_local, fq_local;
    const cplx *fp = nullptr, *fq = nullptr;
    if (v.tier >= 0)
    {
      fp = far_f[v.tier][P].data();
      fq = far_f[v.tier][Q].data();
    }
    else
    {
      auto evaluate = [&](int t, const Side &side, const Vec3 &normal, std::vector<cplx> &out)
      {
        const RefTable &ref = *side.ref;
        const TriangleGeometry &g = spaces.panels[t];
        std::vector<cplx> values(ref.distinct.size());
        for (std::size_t i = 0; i < values.size(); i++)
        {
          const auto &l = ref.distinct[i];
          values[i] = f(l[0] * g.v[0] + l[1] * g.v[1] + l[2] * g.v[2], normal);
        }
        out.resize(side.n);
        for (int i = 0; i < side.n; i++)
        {
          out[i] = values[ref.index[i]];
        }
      };
      evaluate(Q, *v.Q, nQ, fq_local);
      fp_local.resize(v.P->n);
      if (mirror)
      {
        evaluate(P, *v.P, nP, fp_local);
      }
      fp = fp_local.data();
      fq = fq_local.data();
    }
    visit(v,
          [&](int ip, int iq, double w)
          {
            const Vec3 d = v.P->x[ip] - v.Q->x[iq];
            const double r = d.norm();
            cplx G, dG;
            green_radial(k, r, G, dG);
            const cplx g = G * w;
            const cplx kx = v.identical ? cplx(0.0) : dG * (d.dot(nP) / r) * w;
            const double *wp = v.P->wv(ip, nw), *zp = v.P->zv(ip, nz);
            const cplx gf = g * fq[iq], kf = kx * fq[iq];
            for (int a = 0; a < nw; a++)
            {
              l.vw_p[a] += gf * wp[a];
            }
            for (int i = 0; i < nz; i++)
            {
              l.vz_p[i] += gf * zp[i];
              l.kz_p[i] += kf * zp[i];
            }
            if (mirror)
            {
              const cplx ky = v.identical ? cplx(0.0) : -dG * (d.dot(nQ) / r) * w;
              const double *wq = v.Q->wv(iq, nw), *zq = v.Q->zv(iq, nz);
              const cplx gf2 = g * fp[ip];
              // With the roles swapped, d/dn(y) of the pair is d/dn(x) of the mirror.
              const cplx kf2 = ky * fp[ip];
              for (int a = 0; a < nw; a++)
              {
                l.vw_q[a] += gf2 * wq[a];
              }
              for (int i = 0; i < nz; i++)
              {
                l.vz_q[i] += gf2 * zq[i];
                l.kz_q[i] += kf2 * zq[i];
              }
            }
          });
  };

  auto scatter = [&](int P, int Q, const Local &l)
  {
    for (int a = 0; a < nw; a++)
    {
      out.V_w[P * nw + a] += l.vw_p[a];
      out.V_w[Q * nw + a] += l.vw_q[a];
    }
    for (int i = 0; i < nz; i++)
    {
      out.V_z[spaces.z_dofs(P)[i]] += l.vz_p[i];
      out.Kp_z[spaces.z_dofs(P)[i]] += l.kz_p[i];
      out.V_z[spaces.z_dofs(Q)[i]] += l.vz_q[i];
      out.Kp_z[spaces.z_dofs(Q)[i]] += l.kz_q[i];
    }
  };

  sweep(ctx, zero, compute, scatter);
  return out;
}

}  // namespace mortar
