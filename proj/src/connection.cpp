#include "sbsurf/connection.hpp"

namespace sbsurf {

ConnectionTorsion build_connections(const MetricJet& mj) {
  ConnectionTorsion ct;

  std::array<std::array<Jet1, 2>, 2> up;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) up[k][l] = mj.hinv[k][l].truncate();

  // Chern: gamma^k_{ij} = h^{k lbar} d_i h_{j lbar}.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        cplx acc = 0.0;
        for (int l = 0; l < 2; ++l) acc += mj.up(k, l) * mj.h[j][l].d[i];
        ct.chern_gamma[i][j][k] = acc;
      }

  // Strominger-Bismut, holomorphic directions: gamma^k_{Aj} = h^{k lbar} d_j h_{A lbar}.
  for (int A = 0; A < 2; ++A)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        Jet1 acc;
        for (int l = 0; l < 2; ++l) acc = acc + up[k][l] * mj.h[A][l].deriv(j);
        ct.sb_gamma_jet[A][j][k] = acc;
        ct.sb_gamma[A][j][k] = acc.v;
      }

  // Antiholomorphic directions: gamma^k_{bbar j} = h^{k lbar}(dbar_b h_{j lbar} - dbar_l h_{j bbar}).
  for (int b = 0; b < 2; ++b)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        Jet1 acc;
        for (int l = 0; l < 2; ++l)
          acc = acc + up[k][l] * (mj.h[j][l].deriv(2 + b) - mj.h[j][b].deriv(2 + l));
        ct.sb_gamma_jet[2 + b][j][k] = acc;
        ct.sb_gamma[2 + b][j][k] = acc.v;
      }

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        ct.sb_torsion[i][j][k] = ct.sb_gamma[i][j][k] - ct.sb_gamma[j][i][k];

  // T_i = sum_k sbT^k_{ki}.
  for (int i = 0; i < 2; ++i) {
    Jet1 acc;
    for (int k = 0; k < 2; ++k) acc = acc + ct.sb_gamma_jet[k][i][k] - ct.sb_gamma_jet[i][k][k];
    ct.T[i] = acc;
  }

  // T_{ik lbar} = d_k h_{i lbar} - d_i h_{k lbar}.
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) ct.T_low[i][k][l] = mj.h[i][l].deriv(k) - mj.h[k][l].deriv(i);

  return ct;
}

TorsionForms torsion_one_forms(const ConnectionTorsion& ct, const MetricJet& mj) {
  TorsionForms tf;
  tf.dbar_star_omega = Form(1, 0);
  tf.del_star_omega = Form(0, 1);
  for (int i = 0; i < 2; ++i) {
    tf.dbar_star_omega.at(1 << i, 0) = cplx(0.0, 1.0) * ct.T[i].v;
    tf.del_star_omega.at(0, 1 << i) = cplx(0.0, -1.0) * std::conj(ct.T[i].v);
  }
  cplx acc = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) acc += mj.up(i, j) * ct.T[i].v * std::conj(ct.T[j].v);
  tf.norm_sq = acc.real();
  return tf;
}

NablaTorsion sb_nabla_torsion(const ConnectionTorsion& ct, const MetricJet& mj) {
  NablaTorsion nt;

  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          cplx acc = ct.T_low[i][k][l].d[j];
          for (int p = 0; p < 2; ++p) {
            acc -= ct.sb_gamma[j][i][p] * ct.T_low[p][k][l].v;
            acc -= ct.sb_gamma[j][k][p] * ct.T_low[i][p][l].v;
          }
          nt.nabla_low[j][i][k][l] = acc;
        }

  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) {
      cplx acc = 0.0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) acc += mj.up(k, l) * nt.nabla_low[j][i][k][l];
      nt.nabla_T[j][i] = -acc;
    }

  // Full covariant derivative, all slots corrected, over the four directions.
  double res = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          cplx acc = ct.T_low[i][k][l].d[a];
          for (int p = 0; p < 2; ++p) {
            acc -= ct.sb_gamma[a][i][p] * ct.T_low[p][k][l].v;
            acc -= ct.sb_gamma[a][k][p] * ct.T_low[i][p][l].v;
            acc -= std::conj(ct.sb_gamma[conj_dir(a)][l][p]) * ct.T_low[i][k][p].v;
          }
          res = std::max(res, std::abs(acc));
        }
  nt.parallel_residual = res;
  return nt;
}

std::array<std::array<cplx, 2>, 2> sb_nabla1_T(const ConnectionTorsion& ct) {
  std::array<std::array<cplx, 2>, 2> r{};
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) {
      cplx acc = ct.T[i].d[j];
      for (int k = 0; k < 2; ++k) acc -= ct.sb_gamma[j][i][k] * ct.T[k].v;
      r[j][i] = acc;
    }
  return r;
}

std::array<std::array<cplx, 2>, 2> chern_nabla1_T(const ConnectionTorsion& ct) {
  std::array<std::array<cplx, 2>, 2> r{};
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) {
      cplx acc = ct.T[i].d[j];
      for (int k = 0; k < 2; ++k) acc -= ct.chern_gamma[j][i][k] * ct.T[k].v;
      r[j][i] = acc;
    }
  return r;
}

}  // namespace sbsurf
