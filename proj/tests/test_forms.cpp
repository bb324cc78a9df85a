#include <doctest.h>

#include <random>

#include "sbsurf/forms.hpp"
#include "sbsurf/sample.hpp"

using namespace sbsurf;

namespace {

std::mt19937_64 rng(42);

cplx rand_c() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return cplx(u(rng), u(rng));
}

Form rand_form(int p, int q) {
  Form f(p, q);
  for (int mh = 0; mh < 4; ++mh)
    for (int ma = 0; ma < 4; ++ma)
      if (detail::popcount2(mh) == p && detail::popcount2(ma) == q) f.at(mh, ma) = rand_c();
  return f;
}

MetricJet random_metric_jet() {
  // positive-definite Hermitian value with random first/second jets is not
  // needed here; take a builtin metric at a random point instead.
  const MetricField m = MetricField::torus_perturbed(0.35, 9);
  static int k = 0;
  const auto pts = sample_points(Chart::torus, 50, 77);
  return metric_jet(m, pts[(k++) % pts.size()]);
}

}  // namespace

TEST_CASE("wedge of the four coordinate lines gives the top monomial") {
  Form dz1(1, 0), dz2(1, 0), dzb1(0, 1), dzb2(0, 1);
  dz1.at(1, 0) = 1.0;
  dz2.at(2, 0) = 1.0;
  dzb1.at(0, 1) = 1.0;
  dzb2.at(0, 2) = 1.0;
  const Form top = wedge(wedge(dz1, dzb1), wedge(dz2, dzb2));
  CHECK(top.p == 2);
  CHECK(top.q == 2);
  // dz1 dzb1 dz2 dzb2 = -(dz1 dz2 dzb1 dzb2)
  CHECK(std::abs(top.at(3, 3) + 1.0) < 1e-15);
}

TEST_CASE("graded commutativity on random forms") {
  const int degs[][2] = {{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}};
  for (const auto& a : degs)
    for (const auto& b : degs) {
      if (a[0] + b[0] > 2 || a[1] + b[1] > 2) continue;
      const Form A = rand_form(a[0], a[1]);
      const Form B = rand_form(b[0], b[1]);
      const Form AB = wedge(A, B);
      const Form BA = wedge(B, A);
      const double sign = ((a[0] + a[1]) * (b[0] + b[1])) % 2 ? -1.0 : 1.0;
      CHECK(max_abs(AB - sign * BA) < 1e-14);
    }
}

TEST_CASE("omega wedge omega over two equals the volume normalization") {
  const MetricJet mj = random_metric_jet();
  const MetricOps<cplx> m = metric_ops(mj);
  const Form w = omega_form(m);
  const Form w2 = 0.5 * wedge(w, w);
  CHECK(std::abs(w2.at(3, 3) - mj.det.v) < 1e-13);
}

TEST_CASE("inner product anchors") {
  for (int rep = 0; rep < 5; ++rep) {
    const MetricJet mj = random_metric_jet();
    const MetricOps<cplx> m = metric_ops(mj);
    const Form w = omega_form(m);
    CHECK(std::abs(inner(w, w, m) - 2.0) < 1e-12);

    // positive definiteness on random forms of each bidegree
    const int degs[][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2}};
    for (const auto& d : degs) {
      const Form a = rand_form(d[0], d[1]);
      const cplx n = inner(a, a, m);
      CHECK(std::abs(n.imag()) < 1e-10);
      CHECK(n.real() > 0.0);
    }
  }
}

TEST_CASE("hodge star satisfies its defining wedge property") {
  const int degs[][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2}};
  for (int rep = 0; rep < 3; ++rep) {
    const MetricJet mj = random_metric_jet();
    const MetricOps<cplx> m = metric_ops(mj);
    const Form vol = volume_form(m);
    for (const auto& d : degs) {
      const Form a = rand_form(d[0], d[1]);
      const Form b = rand_form(d[0], d[1]);
      const Form sb = hodge_star(b, m);
      const Form lhs = wedge(a, hodge_star(conj_form(b), m));
      const cplx ip = inner(a, b, m);
      CHECK(std::abs(lhs.at(3, 3) - ip * vol.at(3, 3)) < 1e-11);
      // star star = (-1)^(p+q)
      const Form ss = hodge_star(sb, m);
      const double sign = (d[0] + d[1]) % 2 ? -1.0 : 1.0;
      CHECK(max_abs(ss - sign * b) < 1e-11);
    }
  }
}

TEST_CASE("star of one, omega and the volume form") {
  const MetricJet mj = random_metric_jet();
  const MetricOps<cplx> m = metric_ops(mj);
  Form one(0, 0);
  one.at(0, 0) = 1.0;
  const Form w = omega_form(m);
  const Form vol = volume_form(m);
  CHECK(max_abs(hodge_star(one, m) - vol) < 1e-13);
  CHECK(max_abs(hodge_star(vol, m) - one) < 1e-13);
  CHECK(max_abs(hodge_star(w, m) - w) < 1e-12);
}

TEST_CASE("lambda is adjoint to wedging with omega") {
  const MetricJet mj = random_metric_jet();
  const MetricOps<cplx> m = metric_ops(mj);
  const Form w = omega_form(m);
  CHECK(std::abs(lambda_contract(w, mj).at(0, 0) - 2.0) < 1e-12);

  const int degs[][2] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  for (const auto& d : degs) {
    const Form a = rand_form(d[0], d[1]);
    const Form la = lambda_contract(a, mj);
    const Form b = rand_form(d[0] - 1, d[1] - 1);
    const cplx lhs = inner(la, b, m);
    const cplx rhs = inner(a, wedge(w, b), m);
    CHECK(std::abs(lhs - rhs) < 1e-11);
  }

  Form zero(1, 1);
  CHECK(std::abs(lambda_contract(zero, mj).at(0, 0)) == 0.0);
  CHECK_THROWS_AS(lambda_contract(rand_form(1, 0), mj), FormContractError);
  CHECK_THROWS_AS(inner(rand_form(1, 0), rand_form(0, 1), metric_ops(mj)), FormContractError);
}

TEST_CASE("dolbeault operators on polynomial coefficient fields") {
  // F = z1 zbar2 dz2 as a jet-coefficient field at a point; del F and dbar F
  // have closed forms.
  const Point p{cplx(0.4, 0.1), cplx(-0.2, 0.7), Chart::hopf};
  FormJ2 F(1, 0);
  F.at(2, 0) = jet_z(0, p) * jet_zbar(1, p);
  const FormJ1 dF = del(F);
  // del F = zbar2 dz1 dz2
  CHECK(std::abs(dF.at(3, 0).v - std::conj(p.z2)) < 1e-14);
  const FormJ1 dbF = dbar(F);
  // dbar F = z1 dzbar2 dz2 = -z1 dz2 dzbar2
  CHECK(std::abs(dbF.at(2, 2).v + p.z1) < 1e-14);

  // d^2 = 0 on scalar fields: dbar del f + del dbar f = 0 for f = |z1|^2 rho
  FormJ2 f(0, 0);
  f.at(0, 0) = jet_z(0, p) * jet_zbar(0, p) * jet_rho(p);
  const Form a = dbar(del(f));
  const Form b = del(dbar(f));
  CHECK(max_abs(a + b) < 1e-13);
}
