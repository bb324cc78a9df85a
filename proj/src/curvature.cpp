#include "sbsurf/curvature.hpp"

namespace sbsurf {

cplx CurvatureBundle::R4(int A, int B, int C, int D) const {
  const bool cbar = C >= 2, dbar = D >= 2;
  if (cbar == dbar) return 0.0;  // g pairs (1,0) with (0,1) only
  const int ci = cbar ? C - 2 : C;
  const int di = dbar ? D - 2 : D;
  if (!cbar) {
    // g(F(e_A,e_B) d/dz^ci, dbar^di-vector) = h_{p dibar} F^p_ci
    cplx acc = 0.0;
    for (int p = 0; p < 2; ++p) acc += low[p][di] * F[A][B][p][ci];
    return acc;
  }
  // argument in T^{0,1}: conjugate bundle, paired with d/dz^di
  cplx acc = 0.0;
  for (int p = 0; p < 2; ++p)
    acc += low[di][p] * std::conj(F[conj_dir(A)][conj_dir(B)][p][ci]);
  return acc;
}

void chern_curvature(const MetricJet& mj, CurvatureBundle& cb) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          cplx acc = -mj.h[k][l].dd[i][2 + j];
          for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q)
              acc += mj.up(p, q) * mj.h[p][l].d[2 + j] * mj.h[k][q].d[i];
          cb.theta[i][j][k][l] = acc;
        }

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cplx t1 = 0.0, t2 = 0.0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          t1 += mj.up(k, l) * cb.theta[i][j][k][l];
          t2 += mj.up(k, l) * cb.theta[k][l][i][j];
        }
      cb.theta1(i, j) = t1;
      cb.theta2(i, j) = t2;
      cb.theta1_ld(i, j) = -mj.logdet_dd[i][j];
    }

  cplx s = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s += mj.up(i, j) * cb.theta1(i, j);
  cb.s_c1 = s.real();
}

void sb_curvature(const MetricJet& mj, const ConnectionTorsion& ct, CurvatureBundle& cb) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) cb.low[i][j] = mj.h[i][j].v;

  // F(e_A,e_B) = d_A Gamma_B - d_B Gamma_A + [Gamma_A, Gamma_B].
  for (int A = 0; A < 4; ++A)
    for (int B = 0; B < 4; ++B) {
      if (A == B) {
        for (int k = 0; k < 2; ++k)
          for (int m = 0; m < 2; ++m) cb.F[A][B][k][m] = 0.0;
        continue;
      }
      for (int k = 0; k < 2; ++k)
        for (int m = 0; m < 2; ++m) {
          cplx acc = ct.sb_gamma_jet[B][m][k].d[A] - ct.sb_gamma_jet[A][m][k].d[B];
          for (int p = 0; p < 2; ++p)
            acc += ct.sb_gamma[A][p][k] * ct.sb_gamma[B][m][p] -
                   ct.sb_gamma[B][p][k] * ct.sb_gamma[A][m][p];
          cb.F[A][B][k][m] = acc;
        }
    }

  // The four Ricci contractions.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cplx r1 = 0.0, r2 = 0.0, r3 = 0.0, r4 = 0.0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          const cplx u = mj.up(k, l);
          r1 += u * cb.R4(i, 2 + j, k, 2 + l);
          r2 += u * cb.R4(k, 2 + l, i, 2 + j);
          r3 += u * cb.R4(i, 2 + l, k, 2 + j);
          r4 += u * cb.R4(k, 2 + j, i, 2 + l);
        }
      cb.ric_sb1(i, j) = r1;
      cb.ric_sb2(i, j) = r2;
      cb.ric_sb3(i, j) = r3;
      cb.ric_sb4(i, j) = r4;
    }

  cplx s1 = 0.0, s2 = 0.0, s2b = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      s1 += mj.up(i, j) * cb.ric_sb1(i, j);
      s2 += mj.up(i, j) * cb.ric_sb3(i, j);
      s2b += mj.up(i, j) * cb.ric_sb4(i, j);
    }
  cb.s_sb1_c = s1;
  cb.s_sb2_c = s2;
  cb.s_sb2_c4 = s2b;
  cb.s_sb1 = s1.real();
  cb.s_sb2 = s2.real();

  // Complexified Ricci, route A: h^{i lbar} R(d_i, X, Y, dbar_l) + h^{l ibar} R(dbar_i, X, Y, d_l).
  auto cric = [&](int X, int Y) {
    cplx acc = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int l = 0; l < 2; ++l)
        acc += mj.up(i, l) * cb.R4(i, X, Y, 2 + l) + mj.up(l, i) * cb.R4(2 + i, X, Y, l);
    return acc;
  };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cb.cric20_A(i, j) = cric(i, j);
      cb.cric11_A(i, j) = cric(i, 2 + j);
      cb.cric11b_A(i, j) = cric(2 + i, j);
      cb.cric02_A(i, j) = cric(2 + i, 2 + j);
    }

  // Route B identifications.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cplx b20 = 0.0, b02 = 0.0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          b20 += mj.up(k, l) * cb.R4(k, i, j, 2 + l);
          b02 += mj.up(k, l) * cb.R4(2 + l, 2 + i, 2 + j, k);
        }
      cb.cric20_B(i, j) = b20;
      cb.cric02_B(i, j) = b02;
      cb.cric11_B(i, j) = cb.ric_sb3(i, j);
      cb.cric11b_B(i, j) = cb.ric_sb4(j, i);
    }

  // (2,0)-part of the complexified Riemannian Ricci:
  // -1/2 (chern-nabla_j T_i + chern-nabla_i T_j + T_i T_j).
  const auto cn = chern_nabla1_T(ct);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      cb.riem_ric20(i, j) = -0.5 * (cn[j][i] + cn[i][j] + ct.T_val(i) * ct.T_val(j));
}

CurvatureBundle curvature_bundle(const MetricJet& mj, const ConnectionTorsion& ct) {
  CurvatureBundle cb;
  chern_curvature(mj, cb);
  sb_curvature(mj, ct, cb);
  return cb;
}

double max_curvature_component(const CurvatureBundle& cb) {
  double m = 0.0;
  for (int A = 0; A < 4; ++A)
    for (int B = 0; B < 4; ++B)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          m = std::max(m, std::abs(cb.R4(A, B, k, 2 + l)));
          m = std::max(m, std::abs(cb.R4(A, B, 2 + k, l)));
        }
  return m;
}

}  // namespace sbsurf
