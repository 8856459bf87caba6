// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/coupling.hpp"

namespace mortar
{

Discretization make_discretization(std::shared_ptr<const VolumeMesh> mesh, int p)
{
  Discretization d;
  d.mesh = mesh;
  d.surface = std::make_shared<const SurfaceMesh>(extract_boundary(*mesh));
  d.volume = build_fe_space(mesh, p);
  d.trace = build_trace_spaces(d.surface, p);
  d.trace_matrix = trace_matrix(d.volume, d.trace);
  d.h = mesh_size(*mesh);
  return d;
}

CVector BlockSystem::rhs() const
{
  CVector b(size());
  b << f, r2, r3;
  return b;
}

CVector BlockSystem::apply(const CVector &x) const
{
  const CVector u = x.segment(0, nV), m = x.segment(nV, nW), e = x.segment(nV + nW, nZ);
  CVector y(size());
  y.segment(0, nV) = A * u + B1 * m;
  y.segment(nV, nZ) = B2 * m + B3 * e;
  y.segment(nV + nZ, nW) = B4 * u + B5 * m + B6 * e;
  return y;
}

CMatrix BlockSystem::dense() const
{
  CMatrix K = CMatrix::Zero(size(), size());
  K.block(0, 0, nV, nV) = CMatrix(A);
  K.block(0, nV, nV, nW) = CMatrix(B1);
  K.block(nV, nV, nZ, nW) = B2;
  K.block(nV, nV + nW, nZ, nZ) = B3;
  K.block(nV + nZ, 0, nW, nV) = CMatrix(B4);
  K.block(nV + nZ, nV, nW, nW) = B5;
  K.block(nV + nZ, nV + nW, nW, nZ) = B6;
  return K;
}

SystemParts assemble_parts(const MediumCoefficients &coeffs, const Discretization &disc,
                           const BemQuadrature &quad)
{
  SystemParts parts;
  parts.interior = assemble_interior(disc.volume, coeffs);
  parts.ops = assemble_operators(coeffs.k, disc.trace, quad);
  parts.C = disc.trace_matrix * RSparse(disc.trace.M_wz.transpose());
  parts.C.makeCompressed();
  return parts;
}

BlockSystem assemble_block_system(const SystemParts &parts, const Discretization &disc)
{
  const BemOperatorSet &ops = parts.ops;
  const TraceSpaces &ts = disc.trace;
  const double k = ops.k;
  const cplx ik = I * k;
  BlockSystem s;
  s.k = k;
  s.nV = disc.volume.num_dofs();
  s.nW = ts.num_w();
  s.nZ = ts.num_z();
  s.A = parts.interior.impedance_block(k);
  s.B1 = -parts.C.cast<cplx>();
  s.B4 = parts.C.transpose().cast<cplx>();
  const CMatrix Mwz = RMatrix(ts.M_wz).cast<cplx>();
  s.B2 = -(0.5 * Mwz.transpose() + ops.Kp_zw + ik * ops.V_wz.transpose());
  s.B3 = -ops.W_zz + ik * (ops.K_zz + ops.Kp_zz) - (k * k) * ops.V_zz;
  s.B5 = ops.V_ww;
  s.B6 = -(0.5 * Mwz + ops.K_wz) - ik * ops.V_wz;
  s.f = CVector::Zero(s.nV);
  s.r2 = CVector::Zero(s.nZ);
  s.r3 = CVector::Zero(s.nW);
  return s;
}

void apply_jump_corrections(const ManufacturedCase &mcase, const Discretization &disc,
                            const BemQuadrature &quad, BlockSystem &system)
{
  if (mcase.zero_jumps)
  {
    system.r2.setZero();
    system.r3.setZero();
    return;
  }
  const double k = mcase.k();
  const cplx ik = I * k;
  const SurfaceField d = [&mcase, ik](const Vec3 &x, const Vec3 &n)
  { return ik * mcase.g1(x) + mcase.g2(x, n); };
  const OperatorLoads loads = apply_operators(k, disc.trace, d, quad);
  const CVector g1 =
      load_w(disc.trace, [&mcase](const Vec3 &x, const Vec3 &) { return mcase.g1(x); },
             2 * disc.trace.degree + 2);
  system.r2 = -(0.5 * loads.M_z + loads.Kp_z + ik * loads.V_z);
  system.r3 = g1 + loads.V_w;
}

BlockSystem assemble_block_system(const ManufacturedCase &mcase, const Discretization &disc,
                                  const BemQuadrature &quad, SystemParts *parts_out)
{
  SystemParts parts = assemble_parts(mcase.coeffs, disc, quad);
  BlockSystem s = assemble_block_system(parts, disc);
  s.f = assemble_load(disc.volume, mcase.f);
  apply_jump_corrections(mcase, disc, quad, s);
  if (parts_out)
  {
    *parts_out = std::move(parts);
  }
  return s;
}

CMatrix assemble_T_matrix(const SystemParts &parts, const Discretization &disc)
{
  const BemOperatorSet &ops = parts.ops;
  const TraceSpaces &ts = disc.trace;
  const double k = ops.k;
  const cplx ik = I * k;
  const int nV = disc.volume.num_dofs(), nW = ts.num_w(), nZ = ts.num_z();
  const int oL = nV, oW = nV + nW;
  CMatrix T = CMatrix::Zero(nV + nW + nZ, nV + nW + nZ);
  const CMatrix C = RMatrix(parts.C).cast<cplx>();
  const CMatrix Mwz = RMatrix(ts.M_wz).cast<cplx>();

  // (A grad u, grad v) - ((kn)^2 u, v) + ik (u, v)_Gamma - <m, v>
  T.block(0, 0, nV, nV) = CMatrix(parts.interior.S) - CMatrix(parts.interior.M) +
                          ik * CMatrix(parts.interior.R);
  T.block(0, nV, nV, nW) = -C;
  // <u, lambda> + <V m, lambda> - <(1/2 + K) uext, lambda> - ik <V uext, lambda>
  T.block(oL, 0, nW, nV) = C.transpose();
  T.block(oL, nV, nW, nW) = ops.V_ww;
  T.block(oL, oW, nW, nZ) = -0.5 * Mwz - ops.K_wz - ik * ops.V_wz;
  // <A' m, w> + <W uext, w> - ik <(K + K') uext, w> + k^2 <V uext, w>
  T.block(oW, nV, nZ, nW) = 0.5 * Mwz.transpose() + ops.Kp_zw + ik * ops.V_wz.transpose();
  T.block(oW, oW, nZ, nZ) = ops.W_zz - ik * ops.K_zz - ik * ops.Kp_zz + (k * k) * ops.V_zz;
  return T;
}

CMatrix assemble_T_matrix(double k, const MediumCoefficients &coeffs, const Discretization &disc,
                          const BemQuadrature &quad)
{
  MediumCoefficients c = coeffs;
  c.k = k;
  return assemble_T_matrix(assemble_parts(c, disc, quad), disc);
}

}  // namespace mortar
