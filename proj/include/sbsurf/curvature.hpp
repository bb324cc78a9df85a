#pragma once

#include "sbsurf/connection.hpp"
#include "sbsurf/metrics.hpp"

namespace sbsurf {

// One complexified tangent direction: holomorphic d/dz^i for codes 0,1 and
// antiholomorphic d/dzbar^i for codes 2,3 (same coding as jet directions).
struct CurvatureBundle {
  // Chern curvature Theta_{i jbar k lbar}, indices [i][j][k][l].
  std::array<std::array<std::array<std::array<cplx, 2>, 2>, 2>, 2> theta{};
  Matrix2cd theta1;       // first Chern-Ricci, curvature trace route
  Matrix2cd theta1_ld;    // same via -d dbar log det h
  Matrix2cd theta2;       // second Chern-Ricci
  double s_c1 = 0.0;

  // Strominger-Bismut endomorphism curvature blocks on the holomorphic
  // frame: F[A][B][k][m] is the coefficient on d/dz^k of F(e_A,e_B) d/dz^m.
  std::array<std::array<std::array<std::array<cplx, 2>, 2>, 4>, 4> F{};

  Matrix2cd ric_sb1, ric_sb2, ric_sb3, ric_sb4;
  cplx s_sb1_c, s_sb2_c, s_sb2_c4;
  double s_sb1 = 0.0, s_sb2 = 0.0;

  // Complexified Ricci blocks, route A (direct double contraction) and
  // route B (identifications with the third/fourth Ricci curvatures).
  Matrix2cd cric20_A, cric11_A, cric11b_A, cric02_A;
  Matrix2cd cric20_B, cric11_B, cric11b_B, cric02_B;

  // (2,0)-part of the complexified Riemannian Ricci curvature.
  Matrix2cd riem_ric20;

  // Metric values captured for the pairing in R4.
  std::array<std::array<cplx, 2>, 2> low{};

  // R(e_A, e_B, argC, argD) with arguments in the complexified frame.
  cplx R4(int A, int B, int C, int D) const;
};

// Chern curvature, both first-Chern-Ricci routes, and the second
// Chern-Ricci, from the metric jets alone.
void chern_curvature(const MetricJet& mj, CurvatureBundle& cb);

// Bundle curvature of the Strominger-Bismut connection over the four
// complexified directions (coordinate frame, no bracket term), the four
// Ricci contractions, both scalars, and the complexified Ricci blocks.
void sb_curvature(const MetricJet& mj, const ConnectionTorsion& ct, CurvatureBundle& cb);

// Convenience: full bundle at a point.
CurvatureBundle curvature_bundle(const MetricJet& mj, const ConnectionTorsion& ct);

// Largest |R(e_A,e_B,.,.)| component over all direction pairs and both
// argument types.
double max_curvature_component(const CurvatureBundle& cb);

}  // namespace sbsurf
