#include <doctest.h>

#include "sbsurf/jets.hpp"

using namespace sbsurf;

namespace {

Point hopf_point(cplx z1, cplx z2) { return Point{z1, z2, Chart::hopf}; }

double jet_diff(const Jet2& a, const Jet2& b) {
  double m = std::abs(a.v - b.v);
  for (int i = 0; i < 4; ++i) {
    m = std::max(m, std::abs(a.d[i] - b.d[i]));
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a.dd[i][j] - b.dd[i][j]));
  }
  return m;
}

}  // namespace

TEST_CASE("product jet of z1 zbar1 at (1,0)") {
  const Point p = hopf_point(1.0, 0.0);
  const Jet2 f = jet_z(0, p) * jet_zbar(0, p);
  CHECK(std::abs(f.v - 1.0) < 1e-15);
  CHECK(std::abs(f.d[0] - 1.0) < 1e-15);
  CHECK(std::abs(f.d[2] - 1.0) < 1e-15);
  CHECK(std::abs(f.dd[0][2] - 1.0) < 1e-15);
  CHECK(std::abs(f.d[1]) < 1e-15);
  CHECK(std::abs(f.dd[0][0]) < 1e-15);
  CHECK(std::abs(f.dd[1][3]) < 1e-15);
}

TEST_CASE("reciprocal of a constant jet") {
  const Jet2 two = jet_const(2.0);
  const Jet2 inv = jet_inv(two);
  CHECK(std::abs(inv.v - 0.5) < 1e-15);
  for (int a = 0; a < 4; ++a) {
    CHECK(std::abs(inv.d[a]) < 1e-15);
    for (int b = 0; b < 4; ++b) CHECK(std::abs(inv.dd[a][b]) < 1e-15);
  }
}

TEST_CASE("reciprocal of rho against hand derivatives at (1,0)") {
  // 1/rho: d_1 = -zbar1/rho^2 = -1, d_1 dbar_1 = -1/rho^2 + 2|z1|^2/rho^3 = +1.
  const Point p = hopf_point(1.0, 0.0);
  const Jet2 f = jet_inv(jet_rho(p));
  CHECK(std::abs(f.v - 1.0) < 1e-14);
  CHECK(std::abs(f.d[0] + 1.0) < 1e-14);
  CHECK(std::abs(f.dd[0][2] - 1.0) < 1e-14);
  CHECK(std::abs(f.dd[1][3] + 1.0) < 1e-14);  // d_2 dbar_2 (1/rho) = -1/rho^2 at (1,0)
}

TEST_CASE("fd_jet2 on |z1|^2") {
  const Point p = hopf_point(1.0, 0.0);
  const auto f = [](const Point& q) { return q.z1 * std::conj(q.z1); };
  const Jet2 fd = fd_jet2(f, p, 1e-3);
  Jet2 exact = jet_z(0, p) * jet_zbar(0, p);
  CHECK(jet_diff(fd, exact) < 1e-9);
}

TEST_CASE("fd_jet2 on log rho") {
  const Point p = hopf_point(1.0, 0.0);
  const auto f = [](const Point& q) {
    return cplx(std::log(std::norm(q.z1) + std::norm(q.z2)), 0.0);
  };
  const Jet2 fd = fd_jet2(f, p, fd_default_step(p));
  CHECK(std::abs(fd.d[0] - 1.0) < 1e-7);
  CHECK(std::abs(fd.dd[0][2]) < 1e-7);
  CHECK(std::abs(fd.dd[1][3] - 1.0) < 1e-7);
}

TEST_CASE("fd_jet2 on a constant") {
  const Point p = hopf_point(1.2, cplx(0.3, 0.4));
  const Jet2 fd = fd_jet2([](const Point&) { return cplx(3.25, -1.5); }, p, 1e-4);
  CHECK(std::abs(fd.v - cplx(3.25, -1.5)) == 0.0);
  for (int a = 0; a < 4; ++a) {
    CHECK(std::abs(fd.d[a]) == 0.0);
    for (int b = 0; b < 4; ++b) CHECK(std::abs(fd.dd[a][b]) == 0.0);
  }
}

TEST_CASE("Wirtinger consistency on monomials") {
  // d/dz1 f = (d/dx1 - i d/dx3) f / 2 checked on f = z1^2 zbar2.
  const Point p = hopf_point(cplx(0.7, 0.2), cplx(1.1, -0.5));
  const auto f = [](const Point& q) { return q.z1 * q.z1 * std::conj(q.z2); };
  const Jet2 fd = fd_jet2(f, p, 1e-3);
  const Jet2 exact = jet_z(0, p) * jet_z(0, p) * jet_zbar(1, p);
  CHECK(jet_diff(fd, exact) < 1e-8);

  const double h = 1e-5;
  const cplx dx1 = (f(p.shifted(0, h)) - f(p.shifted(0, -h))) / (2.0 * h);
  const cplx dx3 = (f(p.shifted(2, h)) - f(p.shifted(2, -h))) / (2.0 * h);
  const cplx wirt = 0.5 * (dx1 - cplx(0.0, 1.0) * dx3);
  CHECK(std::abs(wirt - exact.d[0]) < 1e-8);
}

TEST_CASE("conjugation relations for jets of real scalars") {
  const Point p = hopf_point(cplx(0.9, -0.3), cplx(0.2, 0.6));
  const Jet2 f = jet_log(jet_rho(p));  // real-valued field
  for (int a = 0; a < 4; ++a) {
    CHECK(std::abs(f.d[conj_dir(a)] - std::conj(f.d[a])) < 1e-14);
    for (int b = 0; b < 4; ++b)
      CHECK(std::abs(f.dd[conj_dir(a)][conj_dir(b)] - std::conj(f.dd[a][b])) < 1e-14);
  }
  CHECK(jet_diff(jet_conj(f), f) < 1e-14);
}
