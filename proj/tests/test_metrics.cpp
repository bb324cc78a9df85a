#include <doctest.h>

#include "sbsurf/metrics.hpp"
#include "sbsurf/sample.hpp"

using namespace sbsurf;

namespace {

double jet_diff(const Jet2& a, const Jet2& b) {
  double m = std::abs(a.v - b.v);
  for (int i = 0; i < 4; ++i) {
    m = std::max(m, std::abs(a.d[i] - b.d[i]));
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a.dd[i][j] - b.dd[i][j]));
  }
  return m;
}

double jet_scale(const Jet2& a) {
  double m = std::abs(a.v);
  for (int i = 0; i < 4; ++i) {
    m = std::max(m, std::abs(a.d[i]));
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a.dd[i][j]));
  }
  return m;
}

}  // namespace

TEST_CASE("flat torus metric is the identity with zero jets") {
  const MetricField m = MetricField::torus_flat();
  const Point p{cplx(0.3, 0.7), cplx(0.1, 0.9), Chart::torus};
  const MetricJet mj = metric_jet(m, p);
  CHECK(std::abs(mj.h[0][0].v - 1.0) == 0.0);
  CHECK(std::abs(mj.h[0][1].v) == 0.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int a = 0; a < 4; ++a) CHECK(std::abs(mj.h[i][j].d[a]) == 0.0);
}

TEST_CASE("hopf standard jets at (1,0) match hand derivatives") {
  const MetricField m = MetricField::hopf_standard();
  const Point p{1.0, 0.0, Chart::hopf};
  const MetricJet mj = metric_jet(m, p);
  for (int j = 0; j < 2; ++j)
    for (int l = 0; l < 2; ++l) {
      const double expect = j == l ? 1.0 : 0.0;
      CHECK(std::abs(mj.h[j][l].v - expect) < 1e-15);
      // d_1 h_{j lbar} = -delta_{jl}, dbar_1 h_{j lbar} = -delta_{jl} at (1,0)
      CHECK(std::abs(mj.h[j][l].d[0] + expect) < 1e-15);
      CHECK(std::abs(mj.h[j][l].d[2] + expect) < 1e-15);
    }
}

TEST_CASE("fubini-study jets at the origin") {
  const MetricField m = MetricField::fubini_study();
  const Point p{0.0, 0.0, Chart::cp2};
  const MetricJet mj = metric_jet(m, p);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(mj.h[i][j].v - (i == j ? 1.0 : 0.0)) < 1e-15);
      for (int a = 0; a < 4; ++a) CHECK(std::abs(mj.h[i][j].d[a]) < 1e-15);
    }
}

TEST_CASE("inverse jets satisfy h hinv = id through first order") {
  for (const auto& m : {MetricField::torus_perturbed(0.3), MetricField::hopf_conformal(0.2),
                        MetricField::fubini_study()}) {
    const auto pts = sample_points(m.chart(), 20, 11);
    for (const auto& p : pts) {
      const MetricJet mj = metric_jet(m, p);
      for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
          // sum_l h_{i lbar} h^{k lbar} = delta_ik at value and first-jet level
          Jet2 acc = mj.h[i][0] * mj.hinv[k][0] + mj.h[i][1] * mj.hinv[k][1];
          CHECK(std::abs(acc.v - (i == k ? 1.0 : 0.0)) < 1e-12);
          for (int a = 0; a < 4; ++a) CHECK(std::abs(acc.d[a]) < 1e-11);
        }
    }
  }
}

TEST_CASE("metric jets agree with the finite-difference engine") {
  const MetricField metrics[] = {MetricField::torus_flat(), MetricField::torus_perturbed(0.1),
                                 MetricField::hopf_standard(), MetricField::hopf_conformal(0.05),
                                 MetricField::fubini_study()};
  for (const auto& m : metrics) {
    const auto pts = sample_points(m.chart(), 100, 2024);
    for (const auto& p : pts) {
      const MetricJet a = metric_jet(m, p);
      const MetricJet b = metric_jet(m, p, JetMode::fd);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const double scale = std::max(1.0, jet_scale(a.h[i][j]));
          CHECK(jet_diff(a.h[i][j], b.h[i][j]) / scale < 1e-6);
        }
    }
  }
}

TEST_CASE("hermiticity of builtin families") {
  for (const auto& m : {MetricField::torus_perturbed(0.4), MetricField::hopf_conformal(0.5)}) {
    const auto pts = sample_points(m.chart(), 25, 5);
    for (const auto& p : pts) {
      const MetricJet mj = metric_jet(m, p);
      CHECK(std::abs(mj.h[0][1].v - std::conj(mj.h[1][0].v)) < 1e-14);
      CHECK(std::abs(mj.h[0][0].v.imag()) < 1e-14);
      CHECK(std::abs(mj.h[1][1].v.imag()) < 1e-14);
    }
  }
}

TEST_CASE("torus periodicity and hopf dilation equivariance") {
  const MetricField t = MetricField::torus_perturbed(0.2, 3);
  const Point p{cplx(0.21, 0.83), cplx(0.59, 0.07), Chart::torus};
  for (int r = 0; r < 4; ++r) {
    const Point q = p.shifted(r, 1.0);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(jet_diff(t.component(i, j, p), t.component(i, j, q)) < 1e-12);
  }

  for (const auto& m : {MetricField::hopf_standard(), MetricField::hopf_conformal(0.3)}) {
    const Point a{cplx(0.9, 0.4), cplx(-0.2, 0.6), Chart::hopf};
    const Point b{2.0 * a.z1, 2.0 * a.z2, Chart::hopf};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Jet2 ha = m.component(i, j, a);
        const Jet2 hb = m.component(i, j, b);
        CHECK(std::abs(hb.v - ha.v / 4.0) < 1e-14);
        for (int d = 0; d < 4; ++d) CHECK(std::abs(hb.d[d] - ha.d[d] / 8.0) < 1e-14);
        for (int d = 0; d < 4; ++d)
          for (int e = 0; e < 4; ++e)
            CHECK(std::abs(hb.dd[d][e] - ha.dd[d][e] / 16.0) < 1e-14);
      }
  }
}

TEST_CASE("positivity scan and parameter validation") {
  CHECK(positivity_scan(MetricField::torus_flat(), 4).min_eigenvalue == doctest::Approx(1.0));
  const auto rep = positivity_scan(MetricField::torus_perturbed(0.1), 6);
  CHECK(rep.min_eigenvalue >= 1.0 - 2.0 * 0.1);
  CHECK_THROWS_AS(MetricField::torus_perturbed(0.6), MetricSpecError);
  CHECK_THROWS_AS(MetricField::parse("torus-perturbed:eps=9"), MetricSpecError);
  CHECK_THROWS_AS(MetricField::parse("torus-perturbed:epz=0.1"), MetricSpecError);
  CHECK_THROWS_AS(MetricField::parse("warp-core"), MetricSpecError);
  CHECK(MetricField::parse("torus-perturbed:eps=0.1,seed=3").seed() == 3);
}
