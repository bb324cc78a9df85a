#include "sbsurf/sample.hpp"

#include <numbers>
#include <random>

namespace sbsurf {

namespace {

Form ric_to_form(const Matrix2cd& R) {
  Form f(1, 1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) f.at(1 << i, 1 << j) = cplx(0.0, 1.0) * R(i, j);
  return f;
}

}  // namespace

double jet2_scale(const Jet2& a) {
  double m = std::abs(a.v);
  for (int i = 0; i < 4; ++i) {
    m = std::max(m, std::abs(a.d[i]));
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a.dd[i][j]));
  }
  return m;
}

cplx pairing20(const Matrix2cd& A, const Matrix2cd& B, const MetricJet& mj) {
  cplx acc = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          acc += mj.up(i, k) * mj.up(j, l) * A(i, j) * std::conj(B(k, l));
  return acc;
}

double norm20_sq(const Matrix2cd& A, const MetricJet& mj) { return pairing20(A, A, mj).real(); }

PointSample sample_point(const MetricField& m, const Point& p, JetMode mode, double fd_step) {
  PointSample s;
  s.p = p;
  s.mj = metric_jet(m, p, mode, fd_step);
  s.ct = build_connections(s.mj);
  s.nt = sb_nabla_torsion(s.ct, s.mj);
  s.cb = curvature_bundle(s.mj, s.ct);
  s.tf = torsion_one_forms(s.ct, s.mj);

  const MetricOps<cplx> m0 = metric_ops(s.mj);
  const MetricOps<Jet1> m1 = metric_ops_jet(s.mj);

  s.omega = omega_form(m0);
  s.theta1_form = ric_to_form(s.cb.theta1);
  s.theta2_form = ric_to_form(s.cb.theta2);
  s.ric_form[0] = ric_to_form(s.cb.ric_sb1);
  s.ric_form[1] = ric_to_form(s.cb.ric_sb2);
  s.ric_form[2] = ric_to_form(s.cb.ric_sb3);
  s.ric_form[3] = ric_to_form(s.cb.ric_sb4);
  s.cric11_form = ric_to_form(s.cb.cric11_A);

  // Torsion one-form fields with coefficient jets.
  FormJ1 dbs_field(1, 0), dls_field(0, 1);
  for (int i = 0; i < 2; ++i) dbs_field.at(1 << i, 0) = cplx(0.0, 1.0) * s.ct.T[i];
  dls_field = conj_form(dbs_field);

  s.dbar_star_omega = values(dbs_field);
  s.del_star_omega = values(dls_field);
  s.iTT = cplx(0.0, 1.0) * wedge(s.dbar_star_omega, s.del_star_omega);

  s.d_delstar = del(dls_field);
  s.dbar_dbarstar = dbar(dbs_field);
  s.del_dbarstar = del(dbs_field);
  s.dbar_delstar = dbar(dls_field);

  const FormJ2 omega_j2 = omega_form_jet2(s.mj);
  const FormJ1 omega_j1 = truncate(omega_j2);
  const FormJ1 del_omega_j1 = del(omega_j2);
  const FormJ1 dbar_omega_j1 = dbar(omega_j2);

  s.delstar_del = codifferential_del_star(del_omega_j1, s.mj);
  s.dbarstar_dbar = codifferential_dbar_star(dbar_omega_j1, s.mj);
  s.X = 0.5 * (s.delstar_del + s.dbarstar_dbar);

  s.dbar_star_omega_star = codifferential_dbar_star(omega_j1, s.mj);
  s.del_star_omega_star = codifferential_del_star(omega_j1, s.mj);
  s.i_lam_del_omega = cplx(0.0, 1.0) * lambda_contract(values(del_omega_j1), s.mj);
  s.mi_lam_dbar_omega = cplx(0.0, -1.0) * lambda_contract(values(dbar_omega_j1), s.mj);

  s.lam_dbar_dbarstar = lambda_contract(s.dbar_dbarstar, s.mj).at(0, 0);
  s.lam_d_delstar = lambda_contract(s.d_delstar, s.mj).at(0, 0);
  s.lam_delstar_del = lambda_contract(s.delstar_del, s.mj).at(0, 0);
  s.lam_dbarstar_dbar = lambda_contract(s.dbarstar_dbar, s.mj).at(0, 0);

  s.t2 = s.tf.norm_sq;
  s.t4 = s.t2 * s.t2;

  s.i_delstar_dbarstar = cplx(0.0, 1.0) * codifferential_del_star(dbs_field, s.mj).at(0, 0);
  s.i_dbarstar_delstar = cplx(0.0, 1.0) * codifferential_dbar_star(dls_field, s.mj).at(0, 0);

  const Form del_omega = values(del_omega_j1);
  s.del_omega_sq = inner(del_omega, del_omega, m0).real();
  const Form sds = hodge_star(del(hodge_star(omega_j1, m1)), m0);
  s.star_del_star_sq = inner(sds, sds, m0).real();

  const Form ddbar_omega = del(dbar_omega_j1);
  s.gauduchon_sq = inner(ddbar_omega, ddbar_omega, m0).real();
  s.gauduchon_max = max_abs(ddbar_omega);

  // Complexified Riemannian Ricci, (1,1)-part:
  // theta1 - (del del*w + dbar dbar*w)/2 + (i/2) dbar*w ^ del*w + (s1 - |dbar*w|^2) omega.
  s.rric11 = s.theta1_form - 0.5 * (s.d_delstar + s.dbar_dbarstar) + 0.5 * s.iTT +
             (s.lam_dbar_dbarstar - s.t2) * s.omega;

  double js = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      js = std::max({js, jet2_scale(s.mj.h[i][j]), jet2_scale(s.mj.hinv[i][j])});
  s.unit_scale = js * js;

  return s;
}

Blocks blocks_at(const PointSample& s) {
  Blocks B{};
  const MetricOps<cplx> m0 = metric_ops(s.mj);
  const MetricJet& mj = s.mj;

  const cplx s1 = s.lam_dbar_dbarstar;
  const cplx ssb1 = s.cb.s_sb1_c;
  const cplx ssb2 = s.cb.s_sb2_c;

  Matrix2cd TT, Qs;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      TT(i, j) = s.ct.T_val(i) * s.ct.T_val(j);
      Qs(i, j) = s.cb.cric20_A(i, j) + s.cb.cric20_A(j, i);
    }
  // dbar*w (x) dbar*w has coefficients (i T_i)(i T_j) = -T_i T_j.
  const Matrix2cd TT_form = -TT;

  B[kBVol] = 1.0;
  B[kBT4] = s.t4;
  B[kBLamT2] = s1 * s.t2;
  B[kBLamSq] = s1 * std::conj(s1);
  B[kBDdbsSq] = inner(s.dbar_dbarstar, s.dbar_dbarstar, m0);
  B[kBDelDbsSq] = inner(s.del_dbarstar, s.del_dbarstar, m0);
  B[kBDdsPair] = inner(s.d_delstar, s.dbar_dbarstar, m0);
  B[kBDdbsDsdPair] = inner(s.dbar_dbarstar, s.delstar_del, m0);
  B[kBDdsITT] = inner(s.d_delstar, s.iTT, m0);
  B[kBDdbsITT] = inner(s.dbar_dbarstar, s.iTT, m0);
  B[kBRic20TT] = pairing20(s.cb.cric20_A, TT_form, mj);
  {
    // (cric02, del*w (x) del*w): barred-index pairing, h^{k ibar} h^{l jbar}.
    cplx acc = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            acc += mj.up(k, i) * mj.up(l, j) * s.cb.cric02_A(i, j) * (-TT(k, l));
    B[kBRic02TT] = acc;
  }
  B[kBQm1] = norm20_sq(Qs - TT, mj);
  B[kBQ0] = norm20_sq(Qs, mj);
  B[kBQm3] = norm20_sq(Qs - 3.0 * TT, mj);
  B[kBQm2] = norm20_sq(Qs - 2.0 * TT, mj);
  B[kBRic2ITT] = inner(s.ric_form[1], s.iTT, m0);
  B[kBRic3ITT] = inner(s.ric_form[2], s.iTT, m0);
  B[kBRic4ITT] = inner(s.ric_form[3], s.iTT, m0);
  B[kBRr11ITT] = inner(s.rric11, s.iTT, m0);
  B[kBRic2P] = inner(s.ric_form[1], s.d_delstar + s.dbar_dbarstar, m0);
  B[kBRic2X] = inner(s.ric_form[1], s.X, m0);
  B[kBRic3X] = inner(s.ric_form[2], s.X, m0);
  B[kBRic4X] = inner(s.ric_form[3], s.X, m0);
  B[kBCric11X] = inner(s.cric11_form, s.X, m0);
  B[kBRr20Sq] = norm20_sq(s.cb.riem_ric20, mj);
  B[kBSsb1Sq] = ssb1 * std::conj(ssb1);
  B[kBRic1Sq] = inner(s.ric_form[0], s.ric_form[0], m0);
  B[kBRic2Sq] = inner(s.ric_form[1], s.ric_form[1], m0);
  B[kBRic3Sq] = inner(s.ric_form[2], s.ric_form[2], m0);
  B[kBRic4Sq] = inner(s.ric_form[3], s.ric_form[3], m0);
  B[kBSsb1Lam] = ssb1 * std::conj(s1);
  B[kBSsb1T2] = ssb1 * s.t2;
  B[kBSsb2Sq] = ssb2 * std::conj(ssb2);
  B[kBSsb2Lam] = ssb2 * std::conj(s1);
  B[kBSsb2T2] = ssb2 * s.t2;
  B[kBTheta2Sq] = inner(s.theta2_form, s.theta2_form, m0);
  B[kBSc1Sq] = s.cb.s_c1 * s.cb.s_c1;
  B[kBTheta1Sq] = inner(s.theta1_form, s.theta1_form, m0);
  B[kBDelOmegaSq] = s.del_omega_sq;
  B[kBGaudSq] = s.gauduchon_sq;
  B[kBDsdSq] = inner(s.delstar_del, s.delstar_del, m0);
  B[kBXSq] = inner(s.X, s.X, m0);
  B[kBRr11Sq] = inner(s.rric11, s.rric11, m0);
  B[kBCric20Sq] = norm20_sq(s.cb.cric20_A, mj);
  return B;
}

std::vector<Point> sample_points(Chart chart, int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto u01 = [&gen]() { return double(gen() >> 11) * 0x1p-53; };
  constexpr double pi = std::numbers::pi;

  std::vector<Point> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double u0 = u01(), u1 = u01(), u2 = u01(), u3 = u01();
    Point p;
    p.chart = chart;
    switch (chart) {
      case Chart::torus:
        p.z1 = cplx(u0, u2);
        p.z2 = cplx(u1, u3);
        break;
      case Chart::hopf: {
        const double r = std::exp(u0 * std::log(2.0));
        const double al = 0.5 * pi * (0.02 + 0.96 * u1);
        const double be = 2.0 * pi * u2, ga = 2.0 * pi * u3;
        p.z1 = r * std::sin(al) * cplx(std::cos(be), std::sin(be));
        p.z2 = r * std::cos(al) * cplx(std::cos(ga), std::sin(ga));
        break;
      }
      case Chart::cp2: {
        const double th = 0.5 * pi * (0.02 + 0.90 * u0);
        const double r = std::tan(th);
        const double al = 0.5 * pi * (0.02 + 0.96 * u1);
        const double be = 2.0 * pi * u2, ga = 2.0 * pi * u3;
        p.z1 = r * std::sin(al) * cplx(std::cos(be), std::sin(be));
        p.z2 = r * std::cos(al) * cplx(std::cos(ga), std::sin(ga));
        break;
      }
    }
    pts.push_back(p);
  }
  return pts;
}

}  // namespace sbsurf
