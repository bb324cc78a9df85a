#include <doctest.h>

#include "sbsurf/connection.hpp"
#include "sbsurf/registry.hpp"

using namespace sbsurf;

TEST_CASE("flat torus has vanishing coefficients and torsion") {
  const MetricField m = MetricField::torus_flat();
  const Point p{cplx(0.2, 0.4), cplx(0.8, 0.1), Chart::torus};
  const ConnectionTorsion ct = build_connections(metric_jet(m, p));
  for (int a = 0; a < 4; ++a)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) CHECK(std::abs(ct.sb_gamma[a][j][k]) == 0.0);
  CHECK(std::abs(ct.T_val(0)) == 0.0);
  CHECK(std::abs(ct.T_val(1)) == 0.0);
}

TEST_CASE("hopf torsion components at (1,0)") {
  const MetricField m = MetricField::hopf_standard();
  const Point p{1.0, 0.0, Chart::hopf};
  const MetricJet mj = metric_jet(m, p);
  const ConnectionTorsion ct = build_connections(mj);

  // chern torsion T^2_{12} = -1; the skew-torsion connection transposes it.
  const cplx chernT212 = ct.chern_gamma[0][1][1] - ct.chern_gamma[1][0][1];
  CHECK(std::abs(chernT212 + 1.0) < 1e-14);
  CHECK(std::abs(ct.sb_torsion[0][1][1] - 1.0) < 1e-14);
  CHECK(std::abs(ct.T_val(0) + 1.0) < 1e-14);
  CHECK(std::abs(ct.T_val(1)) < 1e-14);

  const TorsionForms tf = torsion_one_forms(ct, mj);
  CHECK(std::abs(tf.dbar_star_omega.at(1, 0) - cplx(0.0, -1.0)) < 1e-14);
  CHECK(std::abs(tf.norm_sq - 1.0) < 1e-14);
}

TEST_CASE("torsion norm is constant on the hopf model") {
  const MetricField m = MetricField::hopf_standard();
  for (const auto& p : sample_points(Chart::hopf, 25, 12)) {
    const MetricJet mj = metric_jet(m, p);
    const TorsionForms tf = torsion_one_forms(build_connections(mj), mj);
    CHECK(std::abs(tf.norm_sq - 1.0) < 1e-12);
  }
}

TEST_CASE("kaehler families have zero torsion") {
  for (const auto& m : {MetricField::torus_flat(), MetricField::fubini_study()}) {
    for (const auto& p : sample_points(m.chart(), 20, 3)) {
      const ConnectionTorsion ct = build_connections(metric_jet(m, p));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) CHECK(std::abs(ct.sb_torsion[i][j][k]) < 1e-12);
    }
  }
}

TEST_CASE("torsion is the antisymmetrized coefficient array, bitwise") {
  const MetricField m = MetricField::torus_perturbed(0.3, 5);
  for (const auto& p : sample_points(Chart::torus, 10, 17)) {
    const ConnectionTorsion ct = build_connections(metric_jet(m, p));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          CHECK(ct.sb_torsion[i][j][k] == ct.sb_gamma[i][j][k] - ct.sb_gamma[j][i][k]);
          CHECK(ct.sb_torsion[i][j][k] == -ct.sb_torsion[j][i][k]);
        }
  }
}

TEST_CASE("surface torsion trace identities") {
  for (const auto& m : {MetricField::torus_perturbed(0.35, 2), MetricField::hopf_conformal(0.4)}) {
    for (const auto& p : sample_points(m.chart(), 30, 23)) {
      const PointSample s = sample_point(m, p);
      const PointCheck c = evaluate_pointwise("PW-09", s);
      CHECK(c.resid / std::max(c.scale, 1e-12) < 1e-13);
    }
  }
}

TEST_CASE("hopf torsion is parallel, perturbed torus torsion is not") {
  const MetricField hopf = MetricField::hopf_standard();
  double worst = 0.0;
  for (const auto& p : sample_points(Chart::hopf, 25, 31)) {
    const MetricJet mj = metric_jet(hopf, p);
    worst = std::max(worst, sb_nabla_torsion(build_connections(mj), mj).parallel_residual);
  }
  CHECK(worst < 1e-9);

  const MetricField tp = MetricField::torus_perturbed(0.1);
  double best = 1e300;
  for (const auto& p : sample_points(Chart::torus, 25, 31)) {
    const MetricJet mj = metric_jet(tp, p);
    best = std::min(best, sb_nabla_torsion(build_connections(mj), mj).parallel_residual);
  }
  CHECK(best > 1e-3);
}

TEST_CASE("torsion trace partials against finite differences") {
  const MetricField m = MetricField::torus_perturbed(0.2);
  const Point p{cplx(0.13, 0.71), cplx(0.42, 0.09), Chart::torus};
  const ConnectionTorsion ct = build_connections(metric_jet(m, p));
  const double h = 1e-5;
  for (int i = 0; i < 2; ++i) {
    const auto Tat = [&](const Point& q) { return build_connections(metric_jet(m, q)).T_val(i); };
    const cplx dx1 = (Tat(p.shifted(0, h)) - Tat(p.shifted(0, -h))) / (2.0 * h);
    const cplx dx3 = (Tat(p.shifted(2, h)) - Tat(p.shifted(2, -h))) / (2.0 * h);
    const cplx fd = 0.5 * (dx1 - cplx(0.0, 1.0) * dx3);
    CHECK(std::abs(fd - ct.T[i].d[0]) < 1e-9);
  }
}
