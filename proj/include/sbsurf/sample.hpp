#pragma once

#include "sbsurf/connection.hpp"
#include "sbsurf/curvature.hpp"
#include "sbsurf/forms.hpp"
#include "sbsurf/metrics.hpp"

namespace sbsurf {

// Integrand densities accumulated by the quadrature layer. All entries are
// pointwise inner products / norms; the volume density 4 det h is applied
// by the integrator.
enum BlockId : int {
  kBVol,          // 1
  kBT4,           // |dbar*w|^4
  kBLamT2,        // (Lam dbar dbar*w) |dbar*w|^2
  kBLamSq,        // |Lam dbar dbar*w|^2
  kBDdbsSq,       // |dbar dbar*w|^2
  kBDelDbsSq,     // |del dbar*w|^2
  kBDdsPair,      // <del del*w, dbar dbar*w>
  kBDdbsDsdPair,  // <dbar dbar*w, del* del w>
  kBDdsITT,       // <del del*w, i dbar*w ^ del*w>
  kBDdbsITT,      // <dbar dbar*w, i dbar*w ^ del*w>
  kBRic20TT,      // (cric20, dbar*w (x) dbar*w)
  kBRic02TT,      // (cric02, del*w (x) del*w)
  kBQm1,          // |cric20 + t(cric20) - T(x)T|^2
  kBQ0,           // |cric20 + t(cric20)|^2
  kBQm3,          // |cric20 + t(cric20) - 3 T(x)T|^2
  kBQm2,          // |cric20 + t(cric20) - 2 T(x)T|^2
  kBRic2ITT,      // <ric_sb2, i dbar*w ^ del*w>
  kBRic3ITT,
  kBRic4ITT,
  kBRr11ITT,      // <riem ric (1,1), i dbar*w ^ del*w>
  kBRic2P,        // <ric_sb2, del del*w + dbar dbar*w>
  kBRic2X,        // <ric_sb2, (del* del w + dbar* dbar w)/2>
  kBRic3X,
  kBRic4X,
  kBCric11X,      // <route-A (1,1) block as form, X>
  kBRr20Sq,       // |riem ric (2,0)|^2
  kBSsb1Sq,
  kBRic1Sq,
  kBRic2Sq,
  kBRic3Sq,
  kBRic4Sq,
  kBSsb1Lam,
  kBSsb1T2,
  kBSsb2Sq,
  kBSsb2Lam,
  kBSsb2T2,
  kBTheta2Sq,
  kBSc1Sq,        // s_c1^2
  kBTheta1Sq,     // |theta1|^2
  kBDelOmegaSq,   // |del w|^2
  kBGaudSq,       // |del dbar w|^2
  // norms used only as Cauchy-Schwarz scale majorants for the pairings
  kBDsdSq,        // |del* del w|^2
  kBXSq,          // |X|^2
  kBRr11Sq,       // |riem ric (1,1)|^2
  kBCric20Sq,     // |cric20|^2 (tensor norm)
  kNumBlocks
};

using Blocks = std::array<cplx, kNumBlocks>;

// Everything the identity catalogue consumes at one point.
struct PointSample {
  Point p;
  MetricJet mj;
  ConnectionTorsion ct;
  NablaTorsion nt;
  CurvatureBundle cb;
  TorsionForms tf;

  Form omega;            // (1,1)
  Form theta1_form;      // i theta1_{i jbar} dz^i dzbar^j
  Form theta2_form;
  Form ric_form[4];      // the four Strominger-Bismut Ricci forms
  Form iTT;              // i dbar*w ^ del*w
  Form d_delstar;        // del del* w
  Form dbar_dbarstar;    // dbar dbar* w
  Form del_dbarstar;     // del dbar* w   (2,0)
  Form dbar_delstar;     // dbar del* w   (0,2)
  Form delstar_del;      // del* del w    (1,1)
  Form dbarstar_dbar;    // dbar* dbar w  (1,1)
  Form X;                // (delstar_del + dbarstar_dbar)/2
  Form rric11;           // complexified Riemannian Ricci, (1,1)-part
  Form cric11_form;      // route-A (1,1) block as a form

  Form dbar_star_omega;       // torsion route, i T_i dz^i
  Form del_star_omega;
  Form dbar_star_omega_star;  // star route
  Form del_star_omega_star;
  Form i_lam_del_omega;       // i Lambda(del w)
  Form mi_lam_dbar_omega;     // -i Lambda(dbar w)

  cplx lam_dbar_dbarstar;  // s1
  cplx lam_d_delstar;
  cplx lam_delstar_del;
  cplx lam_dbarstar_dbar;
  double t2 = 0.0;  // |dbar*w|^2
  double t4 = 0.0;
  cplx i_delstar_dbarstar;  // i del* dbar* w
  cplx i_dbarstar_delstar;  // i dbar* del* w
  double del_omega_sq = 0.0;
  double star_del_star_sq = 0.0;
  double gauduchon_sq = 0.0;
  double gauduchon_max = 0.0;  // max |coefficient| of del dbar w

  // Squared magnitude of the metric jets; identities whose terms all vanish
  // are judged relative to this input scale.
  double unit_scale = 1.0;
};

PointSample sample_point(const MetricField& m, const Point& p, JetMode mode = JetMode::analytic,
                         double fd_step = 0.0);

Blocks blocks_at(const PointSample& s);

// Seeded uniform points over the model's chart parameter box
// (mt19937_64 with a fixed 53-bit mapping; stream documented in README).
std::vector<Point> sample_points(Chart chart, int n, std::uint64_t seed);

// Symmetric (2,0)-tensor helpers with the double inverse-metric contraction.
cplx pairing20(const Matrix2cd& A, const Matrix2cd& B, const MetricJet& mj);
double norm20_sq(const Matrix2cd& A, const MetricJet& mj);

}  // namespace sbsurf
