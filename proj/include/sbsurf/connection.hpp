#pragma once

#include "sbsurf/forms.hpp"
#include "sbsurf/jets.hpp"
#include "sbsurf/metrics.hpp"

namespace sbsurf {

// Connection coefficients, torsion tensors and the torsion trace at one
// point. Direction indices run over 0..3 as in jets.hpp; the first lower
// index of a coefficient is the covariant-derivative direction.
struct ConnectionTorsion {
  // chern_gamma[i][j][k]: coefficient on d/dz^k of the Chern derivative of
  // d/dz^j along d/dz^i.
  std::array<std::array<std::array<cplx, 2>, 2>, 2> chern_gamma{};

  // sb_gamma[A][j][k]: coefficient on d/dz^k of the Strominger-Bismut
  // derivative of d/dz^j along direction A.
  std::array<std::array<std::array<cplx, 2>, 2>, 4> sb_gamma{};
  std::array<std::array<std::array<Jet1, 2>, 2>, 4> sb_gamma_jet{};

  // sb_torsion[i][j][k], antisymmetric in (i,j); equals by assembly
  // sb_gamma[i][j][k] - sb_gamma[j][i][k].
  std::array<std::array<std::array<cplx, 2>, 2>, 2> sb_torsion{};

  // Torsion trace T_i with its first partials.
  std::array<Jet1, 2> T{};

  // Lowered torsion T_{ik lbar} with first partials; [i][k][l].
  std::array<std::array<std::array<Jet1, 2>, 2>, 2> T_low{};

  cplx T_val(int i) const { return T[i].v; }
};

ConnectionTorsion build_connections(const MetricJet& mj);

struct TorsionForms {
  Form dbar_star_omega;  // i T_i dz^i
  Form del_star_omega;   // -i conj(T_i) dzbar^i
  double norm_sq;        // h^{i jbar} T_i conj(T_j)
};

TorsionForms torsion_one_forms(const ConnectionTorsion& ct, const MetricJet& mj);

// Covariant derivatives of the torsion.
struct NablaTorsion {
  // Holomorphic-slot covariant derivative of the lowered torsion along
  // d/dz^j: nabla_low[j][i][k][l] = d_j T_{ik lbar}
  //   - sb_gamma[j][i][p] T_{pk lbar} - sb_gamma[j][k][p] T_{ip lbar}.
  std::array<std::array<std::array<std::array<cplx, 2>, 2>, 2>, 2> nabla_low{};

  // Trace form entering the curvature contraction identities:
  // nabla_T[j][i] = -h^{k lbar} nabla_low[j][i][k][l].
  std::array<std::array<cplx, 2>, 2> nabla_T{};

  // Max component of the full covariant derivative (all slots corrected)
  // of T_{ik lbar} over the four directions.
  double parallel_residual = 0.0;
};

NablaTorsion sb_nabla_torsion(const ConnectionTorsion& ct, const MetricJet& mj);

// One-form covariant derivatives of T_i along d/dz^j, for the two
// connections: d_j T_i - gamma[j][i][k] T_k.
std::array<std::array<cplx, 2>, 2> sb_nabla1_T(const ConnectionTorsion& ct);
std::array<std::array<cplx, 2>, 2> chern_nabla1_T(const ConnectionTorsion& ct);

}  // namespace sbsurf
